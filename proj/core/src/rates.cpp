#include "fabeam/rates.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fabeam {

namespace {
constexpr double kLn2 = std::numbers::ln2;

double log2_checked(double x, const char* term) {
  if (x <= 0.0)
    throw std::domain_error(std::string("nonpositive log argument in ") +
                            term);
  return std::log2(x);
}

// Sum of h^H W_i h over a stream index set.
double stream_power(const CVec& h, const BeamformerSet& beams, int first,
                    int last, int skip = -1) {
  double s = 0.0;
  for (int i = first; i <= last; ++i) {
    if (i == skip) continue;
    s += quad_form(h, beams.w[std::size_t(i)]);
  }
  return s;
}
}  // namespace

double quad_form(const CVec& h, const CMat& w) {
  return std::real(h.dot(w * h));  // Eigen dot conjugates the left side
}

double BeamformerSet::total_power() const {
  double p = 0.0;
  for (const auto& wi : w) p += wi.trace().real();
  return p;
}

bool BeamformerSet::well_formed(double herm_tol, double eig_tol,
                                double power_tol) const {
  for (const auto& wi : w) {
    if ((wi - wi.adjoint()).cwiseAbs().maxCoeff() > herm_tol) return false;
    Eigen::SelfAdjointEigenSolver<CMat> es(wi, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -eig_tol) return false;
  }
  return total_power() <= power_budget + power_tol;
}

BeamformerSet BeamformerSet::zeros(int users, int antennas, double budget) {
  BeamformerSet b;
  b.w.assign(std::size_t(users) + 1, CMat::Zero(antennas, antennas));
  b.power_budget = budget;
  return b;
}

BeamformerSet BeamformerSet::from_vectors(const std::vector<CVec>& v,
                                          double budget) {
  BeamformerSet b;
  b.power_budget = budget;
  for (const auto& vi : v) {
    b.w.push_back(vi * vi.adjoint());
    b.vectors.push_back(vi);
    b.rank_residual.push_back(0.0);
  }
  return b;
}

RsmaConfig RsmaConfig::uniform(int users, double rc, double s0, double p0) {
  RsmaConfig c;
  c.common_rate = rc;
  c.alpha.assign(std::size_t(users), 1.0 / users);
  c.sensing_floor = s0;
  c.power_budget = p0;
  return c;
}

void RsmaConfig::validate(int users) const {
  if (static_cast<int>(alpha.size()) != users)
    throw std::invalid_argument("alpha size mismatch");
  double sum = 0.0;
  for (double a : alpha) {
    if (a < 0.0) throw std::invalid_argument("alpha must be >= 0");
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("alpha must sum to 1");
  if (common_rate < 0.0) throw std::invalid_argument("R_c must be >= 0");
  if (sensing_floor < 0.0) throw std::invalid_argument("S_0 must be >= 0");
  if (power_budget <= 0.0) throw std::invalid_argument("P_0 must be > 0");
}

double common_rate(const CVec& h_k, const BeamformerSet& beams,
                   double noise_k) {
  if (noise_k <= 0.0) throw std::domain_error("noise power must be > 0");
  const int k1 = beams.streams() - 1;
  const double num = quad_form(h_k, beams.w[std::size_t(k1)]);
  const double den = stream_power(h_k, beams, 0, k1 - 1) + noise_k;
  return std::log2(1.0 + num / den);
}

double private_rate(const CVec& h_k, const BeamformerSet& beams,
                    double noise_k, int user_k) {
  if (noise_k <= 0.0) throw std::domain_error("noise power must be > 0");
  const int k1 = beams.streams() - 1;
  const double num = quad_form(h_k, beams.w[std::size_t(user_k)]);
  const double den =
      stream_power(h_k, beams, 0, k1 - 1, user_k) + noise_k;
  return std::log2(1.0 + num / den);
}

EveRates eve_rates(const CVec& h_eve, const BeamformerSet& beams,
                   double noise_eve) {
  if (noise_eve <= 0.0) throw std::domain_error("noise power must be > 0");
  EveRates r;
  const int k1 = beams.streams() - 1;
  const double common_gain = quad_form(h_eve, beams.w[std::size_t(k1)]);
  const double priv_total = stream_power(h_eve, beams, 0, k1 - 1);
  r.common = std::log2(1.0 + common_gain / (priv_total + noise_eve));
  for (int k = 0; k < k1; ++k) {
    const double num = quad_form(h_eve, beams.w[std::size_t(k)]);
    const double den = priv_total - num + common_gain + noise_eve;
    r.private_rates.push_back(std::log2(1.0 + num / den));
  }
  return r;
}

double secrecy_sum_rate(const ChannelRealization& channels,
                        const BeamformerSet& beams, const RsmaConfig& config) {
  const int users = channels.users();
  config.validate(users);
  const EveRates ev = eve_rates(channels.h_eve, beams, channels.noise_eve);

  double delivered_common = config.common_rate;
  for (int k = 0; k < users; ++k)
    delivered_common = std::min(
        delivered_common,
        common_rate(channels.h[std::size_t(k)], beams, channels.noise_user));

  double total = 0.0;
  for (int k = 0; k < users; ++k) {
    const double rp = private_rate(channels.h[std::size_t(k)], beams,
                                   channels.noise_user, k);
    total += std::max(rp - ev.private_rates[std::size_t(k)], 0.0);
    total += config.alpha[std::size_t(k)] *
             std::max(delivered_common - ev.common, 0.0);
  }
  return total;
}

double sensing_energy(const CVec& h_eve, const BeamformerSet& beams) {
  return stream_power(h_eve, beams, 0, beams.streams() - 1);
}

AuxVariables optimal_aux(const ChannelRealization& channels,
                         const BeamformerSet& beams) {
  AuxVariables aux;
  const int users = channels.users();
  for (int k = 0; k < users; ++k) {
    const double den = stream_power(channels.h[std::size_t(k)], beams, 0,
                                    users - 1, k) +
                       channels.noise_user;
    aux.m.push_back(1.0 / den);
  }
  aux.l = 1.0 / (stream_power(channels.h_eve, beams, 0, beams.streams() - 1) +
                 channels.noise_eve);
  return aux;
}

SurrogateObjective surrogate_objective(const ChannelRealization& channels,
                                       const BeamformerSet& beams,
                                       const AuxVariables& aux,
                                       const RsmaConfig& config) {
  const int users = channels.users();
  config.validate(users);
  if (static_cast<int>(aux.m.size()) != users)
    throw std::invalid_argument("aux size mismatch");
  if (aux.l <= 0.0) throw std::domain_error("aux l must be > 0");

  const CVec& he = channels.h_eve;
  const double eve_priv = stream_power(he, beams, 0, users - 1);
  const double eve_total = eve_priv + quad_form(he, beams.w.back());

  SurrogateObjective out;
  for (int k = 0; k < users; ++k) {
    const double mk = aux.m[std::size_t(k)];
    if (mk <= 0.0) throw std::domain_error("aux m must be > 0");
    const CVec& hk = channels.h[std::size_t(k)];
    const double ak = config.alpha[std::size_t(k)];

    SurrogateTerms t;
    t.psi1 = ak * (config.common_rate +
                   log2_checked(eve_priv + channels.noise_eve, "psi1"));
    t.xi1 = log2_checked(
        stream_power(hk, beams, 0, users - 1) + channels.noise_user, "xi1");
    t.psi2 = log2_checked(
        stream_power(he, beams, 0, users, k) + channels.noise_eve, "psi2");
    t.interference =
        -(mk / kLn2) * (stream_power(hk, beams, 0, users - 1, k) +
                        channels.noise_user);
    t.psi3 = log2_checked(mk, "psi3:m") + 1.0 / kLn2 +
             (ak + 1.0) * (-(aux.l / kLn2) * (eve_total + channels.noise_eve) +
                           log2_checked(aux.l, "psi3:l") + 1.0 / kLn2);
    out.total += t.total();
    out.per_user.push_back(t);
  }
  return out;
}

double exact_objective(const ChannelRealization& channels,
                       const BeamformerSet& beams, const RsmaConfig& config) {
  const int users = channels.users();
  config.validate(users);
  const EveRates ev = eve_rates(channels.h_eve, beams, channels.noise_eve);
  double total = 0.0;
  for (int k = 0; k < users; ++k) {
    const double rp = private_rate(channels.h[std::size_t(k)], beams,
                                   channels.noise_user, k);
    total += rp - ev.private_rates[std::size_t(k)] +
             config.alpha[std::size_t(k)] * (config.common_rate - ev.common);
  }
  return total;
}

}  // namespace fabeam
