#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tomqkd/attack_models.hpp"
#include "tomqkd/intensity_optimizer.hpp"

namespace tomqkd {

// One independent cross-check of an analytic result.
struct OracleReport {
  std::string check;
  double analytic;
  double oracle_value;
  double deviation;
  double tolerance;
  bool pass;
  long long samples = 0;   // Monte-Carlo checks only
  double std_error = 0.0;  // Monte-Carlo checks only
};

// Enumerates the four joint (forward guess, backward guess) outcomes from
// the per-path fidelities and sums the both-correct and both-wrong branches;
// compared against the closed form at 1e-12.
OracleReport enumerate_eve_fidelity(const AttackAngles& angles);
OracleReport enumerate_ab_fidelity(const AttackAngles& angles);

// Event-level intercept-resend simulation on both paths of the two-way
// channel, attacking a fraction x of the pulses. Returns the induced error
// rate (expected x/4) and Eve's information (expected x), each checked at
// three standard errors. Bit-reproducible for fixed (x, samples, seed).
std::array<OracleReport, 2> monte_carlo_ir(double attacked_fraction,
                                           long long samples,
                                           std::uint64_t seed);

// 1e5-point dense log-grid scan over mu, compared against optimize_mu at
// 0.1% relative rate. A region with no positive rate passes when both
// methods flag it.
OracleReport dense_grid_mu_check(const ChannelParams& params,
                                 double distance_km, Protocol protocol,
                                 RateMode mode);

// The checks the `verify` command runs: fidelity enumerations on edge and
// random angle pairs, Monte-Carlo IR at several attack fractions, and
// dense-grid optimizer cross-checks on the supplied parameters.
std::vector<OracleReport> run_oracle_suite(const ChannelParams& params,
                                           std::uint64_t seed,
                                           long long samples);

}  // namespace tomqkd
