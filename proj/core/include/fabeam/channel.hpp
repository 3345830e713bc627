#pragma once

#include <optional>
#include <string>

#include "fabeam/geometry.hpp"
#include "fabeam/rng.hpp"

namespace fabeam {

// Channels realized at a particular placement. In imperfect-CSI mode the
// estimate carries a norm-bounded additive error of radius eps per user.
struct ChannelRealization {
  std::vector<CVec> h;          // exact/estimated per-user channels, length N_T
  std::vector<double> eps;      // CSI error-ball radii (0 => perfect)
  CVec h_eve;                   // sensing channel at the nominal target angle
  double noise_user = 1e-11;    // sigma_k^2, watts (shared across users)
  double noise_eve = 1e-11;     // sigma_e^2, watts

  int users() const { return static_cast<int>(h.size()); }
  bool imperfect() const {
    for (double e : eps)
      if (e > 0.0) return true;
    return false;
  }
};

// Receive field response vector: element l is
// exp(j 2pi/lambda (x sin(theta_l) cos(phi_l) + y cos(theta_l))).
CVec rx_field_response(const Vec2& p, const std::vector<PathAngle>& angles,
                       double wavelength);

// d/dx and d/dy of the receive field response at p.
void rx_field_response_grad(const Vec2& p, const std::vector<PathAngle>& angles,
                            double wavelength, CVec& dfdx, CVec& dfdy);

// Transmit field response matrix G_k (L_k x N_T); column n is the transmit
// response at BS element b_n.
CMat tx_field_response_matrix(const ScenarioGeometry& geo, int user);

// h_k = G_k^H Sigma_k f_k(p_k). Throws on Sigma/path-count mismatch.
CVec user_channel(const ScenarioGeometry& geo, const FaPlacement& placement,
                  int user);

// LoS steering vector toward (theta, phi) scaled by sqrt(gain).
CVec steering_vector(const ScenarioGeometry& geo, double theta, double phi,
                     double gain);

// Sensing channel at the nominal target angles.
CVec sensing_channel(const ScenarioGeometry& geo);

// One steering vector per (theta, phi) in the angle grid, row-major over
// theta then phi.
std::vector<CVec> sensing_channel_grid(const ScenarioGeometry& geo);

enum class PathLossModel {
  kAsPrinted,      // C_0 = (lambda / (4 pi^2))^2
  kConventional,   // C_0 = (lambda / (4 pi))^2
};

struct ScenarioConfig {
  int users = 4;
  int antennas = 4;
  int paths = 12;
  double wavelength = 0.1;            // meters
  double region_side = 0.3;           // A_0, meters
  double pathloss_exponent = 2.8;     // tau
  PathLossModel pathloss_model = PathLossModel::kAsPrinted;
  double user_distance_min = 20.0;    // meters
  double user_distance_max = 100.0;
  double eve_distance_min = 10.0;
  double eve_distance_max = 15.0;
  double noise_user = 1e-11;          // -80 dBm
  double noise_eve = 1e-11;
  double relative_csi_error = 0.0;    // eps_hat; 0 => perfect CSI
  std::vector<double> eve_theta_grid = {3.14159265358979323846 / 10.0,
                                        3.14159265358979323846 / 4.0};
  std::vector<double> eve_phi_grid = {3.14159265358979323846 / 10.0,
                                      3.14159265358979323846 / 3.0};

  double reference_gain() const;  // C_0
  void validate() const;
};

struct Scenario {
  ScenarioGeometry geometry;
  ChannelRealization channels;  // realized at the origin placement
};

// Draws a random scenario. Deterministic in (seed, config): distances
// uniform in the configured ranges, path angles uniform in [0, pi],
// diagonal path-response entries CN(0, C_k / L_k) with C_k = C_0 d_k^-tau.
Scenario sample_scenario(std::uint64_t seed, const ScenarioConfig& config);

// Channels at a placement other than the origin (same geometry).
ChannelRealization realize_channels(const ScenarioGeometry& geo,
                                    const FaPlacement& placement,
                                    double noise_user, double noise_eve,
                                    double relative_csi_error);

// Returns h on (boundary = true) or inside the eps-ball around h_hat.
CVec perturb_channel(const CVec& h_hat, double eps, Rng& rng,
                     bool boundary = true);

}  // namespace fabeam
