#pragma once

#include <optional>
#include <vector>

#include "fabeam/channel.hpp"

namespace fabeam {

// Private covariances W_1..W_K plus the common covariance W_{K+1}, all
// Hermitian PSD. Extracted rank-one vectors are filled in after a solve.
struct BeamformerSet {
  std::vector<CMat> w;                 // size K+1, each N_T x N_T
  std::vector<CVec> vectors;           // optional rank-one extractions
  std::vector<double> rank_residual;   // lambda_2 / lambda_1 per beam
  double power_budget = 0.0;           // P_0 carried alongside

  int streams() const { return static_cast<int>(w.size()); }
  int users() const { return streams() - 1; }
  const CMat& common() const { return w.back(); }

  double total_power() const;
  // Hermitian within tol, eigenvalues >= -tol, power within budget + tol.
  bool well_formed(double herm_tol = 1e-10, double eig_tol = 1e-8,
                   double power_tol = 1e-6) const;

  static BeamformerSet zeros(int users, int antennas, double budget);
  static BeamformerSet from_vectors(const std::vector<CVec>& v, double budget);
};

// Common-rate target, user weights, sensing floor and power budget.
struct RsmaConfig {
  double common_rate = 0.0;     // R_c, bits/s/Hz
  std::vector<double> alpha;    // weights, sum to 1
  double sensing_floor = 0.0;   // S_0, watts
  double power_budget = 1.0;    // P_0, watts

  static RsmaConfig uniform(int users, double rc, double s0, double p0);
  void validate(int users) const;
};

// Lemma-style auxiliary variables for the concave reformulation.
struct AuxVariables {
  std::vector<double> m;  // one per user, > 0
  double l = 0.0;         // shared Eve term, > 0
};

// Quadratic form h^H W h, guaranteed real for Hermitian W.
double quad_form(const CVec& h, const CMat& w);

// Rate of the common stream at user k's channel, Eq.-style covariance form.
double common_rate(const CVec& h_k, const BeamformerSet& beams,
                   double noise_k);

// Rate of user k's private stream after common-stream cancellation.
double private_rate(const CVec& h_k, const BeamformerSet& beams,
                    double noise_k, int user_k);

struct EveRates {
  double common = 0.0;                // e_c
  std::vector<double> private_rates;  // e_{p,k}
};

// Eavesdropper's intercept rates; the common stream is counted as noise
// in the private-rate denominators.
EveRates eve_rates(const CVec& h_eve, const BeamformerSet& beams,
                   double noise_eve);

// Clamped secrecy sum rate. The delivered common rate is
// min(R_c, min_k r_{c,k}) so the metric stays meaningful off-feasibility.
double secrecy_sum_rate(const ChannelRealization& channels,
                        const BeamformerSet& beams, const RsmaConfig& config);

// Power radiated toward the sensing target.
double sensing_energy(const CVec& h_eve, const BeamformerSet& beams);

// Closed-form maximizers of the auxiliary variables given fixed beams.
AuxVariables optimal_aux(const ChannelRealization& channels,
                         const BeamformerSet& beams);

struct SurrogateTerms {
  double psi1 = 0.0;          // weighted common-rate + Eve interference log
  double xi1 = 0.0;           // own-signal log
  double psi2 = 0.0;          // Eve private-denominator log
  double interference = 0.0;  // -m_k/ln2 * (interference + noise)
  double psi3 = 0.0;          // aux-dependent constants and leakage penalty
  double total() const { return psi1 + xi1 + psi2 + interference + psi3; }
};

struct SurrogateObjective {
  std::vector<SurrogateTerms> per_user;
  double total = 0.0;
};

// Term-wise concave surrogate of the secure-rate objective at fixed aux.
// At aux = optimal_aux it equals exact_objective to rounding error and is
// strictly below it otherwise. Throws std::domain_error when a log
// argument is nonpositive (the message names the offending term).
SurrogateObjective surrogate_objective(const ChannelRealization& channels,
                                       const BeamformerSet& beams,
                                       const AuxVariables& aux,
                                       const RsmaConfig& config);

// The exact concave-form objective the surrogate is tight against
// (unclamped per-user secure rates with the common rate held at R_c).
double exact_objective(const ChannelRealization& channels,
                       const BeamformerSet& beams, const RsmaConfig& config);

}  // namespace fabeam
