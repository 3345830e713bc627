#include "fabeam/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fabeam {

namespace {
constexpr double kPi = std::numbers::pi;

// Effective propagation length of path (theta, phi) seen from point p.
inline double path_phase(const Vec2& p, const PathAngle& a) {
  return p.x() * std::sin(a.theta) * std::cos(a.phi) +
         p.y() * std::cos(a.theta);
}
}  // namespace

CVec rx_field_response(const Vec2& p, const std::vector<PathAngle>& angles,
                       double wavelength) {
  if (wavelength <= 0.0) throw std::invalid_argument("wavelength must be > 0");
  const double kappa = 2.0 * kPi / wavelength;
  CVec f(static_cast<Eigen::Index>(angles.size()));
  for (std::size_t l = 0; l < angles.size(); ++l)
    f[static_cast<Eigen::Index>(l)] =
        std::polar(1.0, kappa * path_phase(p, angles[l]));
  return f;
}

void rx_field_response_grad(const Vec2& p, const std::vector<PathAngle>& angles,
                            double wavelength, CVec& dfdx, CVec& dfdy) {
  const double kappa = 2.0 * kPi / wavelength;
  const auto n = static_cast<Eigen::Index>(angles.size());
  dfdx.resize(n);
  dfdy.resize(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    const auto& a = angles[static_cast<std::size_t>(l)];
    const cplx fl = std::polar(1.0, kappa * path_phase(p, a));
    const cplx jk(0.0, kappa);
    dfdx[l] = jk * std::sin(a.theta) * std::cos(a.phi) * fl;
    dfdy[l] = jk * std::cos(a.theta) * fl;
  }
}

CMat tx_field_response_matrix(const ScenarioGeometry& geo, int user) {
  const auto& angles = geo.path_angles.at(static_cast<std::size_t>(user));
  const auto L = static_cast<Eigen::Index>(angles.size());
  const auto N = static_cast<Eigen::Index>(geo.bs_positions.size());
  CMat g(L, N);
  for (Eigen::Index n = 0; n < N; ++n)
    g.col(n) = rx_field_response(geo.bs_positions[static_cast<std::size_t>(n)],
                                 angles, geo.wavelength);
  return g;
}

CVec user_channel(const ScenarioGeometry& geo, const FaPlacement& placement,
                  int user) {
  const auto& sigma = geo.path_response.at(static_cast<std::size_t>(user));
  const auto& angles = geo.path_angles.at(static_cast<std::size_t>(user));
  if (sigma.rows() != static_cast<Eigen::Index>(angles.size()))
    throw std::invalid_argument("path response does not match path count");
  const CMat g = tx_field_response_matrix(geo, user);
  const CVec f = rx_field_response(
      placement.positions.at(static_cast<std::size_t>(user)), angles,
      geo.wavelength);
  return g.adjoint() * (sigma * f);
}

CVec steering_vector(const ScenarioGeometry& geo, double theta, double phi,
                     double gain) {
  const double kappa = 2.0 * kPi / geo.wavelength;
  const double amp = std::sqrt(gain);
  const PathAngle a{theta, phi};
  CVec h(geo.antennas());
  for (int n = 0; n < geo.antennas(); ++n)
    h[n] = amp * std::polar(1.0, kappa * path_phase(
                                     geo.bs_positions[std::size_t(n)], a));
  return h;
}

CVec sensing_channel(const ScenarioGeometry& geo) {
  return steering_vector(geo, geo.eve_theta, geo.eve_phi, geo.eve_gain);
}

std::vector<CVec> sensing_channel_grid(const ScenarioGeometry& geo) {
  std::vector<CVec> grid;
  grid.reserve(geo.eve_theta_grid.size() * geo.eve_phi_grid.size());
  for (double th : geo.eve_theta_grid)
    for (double ph : geo.eve_phi_grid)
      grid.push_back(steering_vector(geo, th, ph, geo.eve_gain));
  return grid;
}

double ScenarioConfig::reference_gain() const {
  switch (pathloss_model) {
    case PathLossModel::kAsPrinted: {
      const double c = wavelength / (4.0 * kPi * kPi);
      return c * c;
    }
    case PathLossModel::kConventional: {
      const double c = wavelength / (4.0 * kPi);
      return c * c;
    }
  }
  throw std::logic_error("unknown path-loss model");
}

void ScenarioConfig::validate() const {
  if (users < 1 || antennas < 1 || paths < 1)
    throw std::invalid_argument("users, antennas and paths must be >= 1");
  if (wavelength <= 0.0) throw std::invalid_argument("wavelength must be > 0");
  if (region_side < 0.0) throw std::invalid_argument("region side must be >= 0");
  if (user_distance_min <= 0.0 || user_distance_max < user_distance_min)
    throw std::invalid_argument("bad user distance range");
  if (eve_distance_min <= 0.0 || eve_distance_max < eve_distance_min)
    throw std::invalid_argument("bad eve distance range");
  if (noise_user <= 0.0 || noise_eve <= 0.0)
    throw std::invalid_argument("noise powers must be > 0");
  if (relative_csi_error < 0.0)
    throw std::invalid_argument("relative CSI error must be >= 0");
  if (eve_theta_grid.empty() || eve_phi_grid.empty())
    throw std::invalid_argument("eve angle grid must be nonempty");
}

Scenario sample_scenario(std::uint64_t seed, const ScenarioConfig& config) {
  config.validate();
  Rng rng(seed);

  ScenarioGeometry geo;
  geo.wavelength = config.wavelength;
  geo.region_side = config.region_side;
  geo.bs_positions = square_upa(config.antennas, config.wavelength / 2.0);
  geo.eve_theta_grid = config.eve_theta_grid;
  geo.eve_phi_grid = config.eve_phi_grid;

  const double c0 = config.reference_gain();
  for (int k = 0; k < config.users; ++k) {
    const double dk =
        rng.uniform(config.user_distance_min, config.user_distance_max);
    const double ck = c0 * std::pow(dk, -config.pathloss_exponent);
    std::vector<PathAngle> angles(static_cast<std::size_t>(config.paths));
    for (auto& a : angles) {
      a.theta = rng.uniform(0.0, kPi);
      a.phi = rng.uniform(0.0, kPi);
    }
    CMat sigma = CMat::Zero(config.paths, config.paths);
    for (int l = 0; l < config.paths; ++l)
      sigma(l, l) = rng.cnormal(ck / config.paths);
    geo.path_angles.push_back(std::move(angles));
    geo.path_response.push_back(std::move(sigma));
  }

  const double de =
      rng.uniform(config.eve_distance_min, config.eve_distance_max);
  geo.eve_gain = c0 * std::pow(de, -config.pathloss_exponent);
  // Nominal target angles are drawn from the configured grid so the
  // imperfect-CSI model always contains the truth.
  geo.eve_theta =
      geo.eve_theta_grid[rng.integer(geo.eve_theta_grid.size())];
  geo.eve_phi = geo.eve_phi_grid[rng.integer(geo.eve_phi_grid.size())];
  geo.validate();

  Scenario s;
  s.geometry = geo;
  s.channels =
      realize_channels(geo, FaPlacement::origin(config.users),
                       config.noise_user, config.noise_eve,
                       config.relative_csi_error);
  return s;
}

ChannelRealization realize_channels(const ScenarioGeometry& geo,
                                    const FaPlacement& placement,
                                    double noise_user, double noise_eve,
                                    double relative_csi_error) {
  ChannelRealization ch;
  ch.noise_user = noise_user;
  ch.noise_eve = noise_eve;
  for (int k = 0; k < geo.users(); ++k) {
    CVec hk = user_channel(geo, placement, k);
    const double eps =
        relative_csi_error > 0.0
            ? std::sqrt(relative_csi_error * hk.norm())
            : 0.0;
    ch.h.push_back(std::move(hk));
    ch.eps.push_back(eps);
  }
  ch.h_eve = sensing_channel(geo);
  return ch;
}

CVec perturb_channel(const CVec& h_hat, double eps, Rng& rng, bool boundary) {
  if (eps < 0.0) throw std::invalid_argument("error radius must be >= 0");
  if (eps == 0.0) return h_hat;
  CVec d(h_hat.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = rng.cnormal(1.0);
  double r = eps;
  if (!boundary) {
    // Uniform radius in the ball for a 2n-dimensional real sphere.
    r *= std::pow(rng.uniform(), 1.0 / (2.0 * double(h_hat.size())));
  }
  return h_hat + (r / d.norm()) * d;
}

}  // namespace fabeam
