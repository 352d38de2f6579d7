#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tomqkd/keyrate_engine.hpp"

namespace tomqkd {

// Search bounds for the source intensity. The upper bound sits far above
// any optimal weak-coherent intensity in this regime.
inline constexpr double kMuSearchMin = 1e-4;
inline constexpr double kMuSearchMax = 2.0;
inline constexpr int kCoarseScanPoints = 200;
inline constexpr double kMuTolerance = 1e-6;
inline constexpr double kDistanceBisectTolKm = 0.01;

struct OptimizeResult {
  double mu_opt;
  double rate_opt;
  bool positive_rate;  // false flags a no-positive-rate region, not an error
  RatePoint point;
};

// Maximizes the selected rate over mu in [kMuSearchMin, kMuSearchMax]:
// a coarse log-spaced scan brackets the global maximum (the rate is not
// guaranteed unimodal), then golden-section refines to kMuTolerance.
OptimizeResult optimize_mu(const ChannelParams& params, double distance_km,
                           Protocol protocol, RateMode mode);

struct DistanceGrid {
  double start_km = 0.0;
  double stop_km = 120.0;
  double step_km = 0.5;

  std::vector<double> points() const;  // inclusive of both ends
};

struct SweepSeries {
  Protocol protocol;
  std::vector<RatePoint> points;
  // Distance where the optimized rate crosses zero, bisected to 0.01 km;
  // absent when the series never turns positive or is still positive at
  // the end of the grid.
  std::optional<double> max_distance_km;
};

struct SweepResult {
  RateMode mode;
  std::vector<double> distances_km;
  std::vector<SweepSeries> series;
  // mu_opt(tom) / mu_opt(bb84) per distance when both protocols were swept
  // and both optima are positive; NaN elsewhere.
  std::vector<double> ratio_k;
  // First distance where the bb84 rate overtakes the tom rate inside the
  // region where either is positive (photon-resolved sweeps over both
  // protocols), bisected to 0.01 km.
  std::optional<double> crossover_km;
};

SweepResult sweep(const ChannelParams& params, const DistanceGrid& grid,
                  std::span<const Protocol> protocols, RateMode mode);

struct ConditionCheck {
  double threshold;  // eta_alice^-1 * 10^(gamma l / 10)
  bool holds;        // intensity ratio k exceeds the threshold
};

// Sufficient condition for the two-way rate to beat bb84 at this distance.
ConditionCheck check_sufficient_condition(const ChannelParams& params,
                                          double distance_km,
                                          double intensity_ratio);

}  // namespace tomqkd
