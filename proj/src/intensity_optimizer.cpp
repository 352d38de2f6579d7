#include "tomqkd/intensity_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace tomqkd {

namespace {

// Golden-section ascent on [a, b]; f is assumed unimodal there after the
// coarse scan has bracketed the maximum.
std::pair<double, double> golden_section_max(
    const std::function<double(double)>& f, double a, double b, double tol) {
  constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c);
  double fd = f(d);
  while ((b - a) > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace

OptimizeResult optimize_mu(const ChannelParams& params, double distance_km,
                           Protocol protocol, RateMode mode) {
  const ChannelParams at = params.with_distance(distance_km);
  const auto rate_at = [&](double mu) {
    return key_rate(at, mu, protocol, mode).rate;
  };

  const double log_lo = std::log(kMuSearchMin);
  const double log_hi = std::log(kMuSearchMax);
  int best = 0;
  double best_rate = -std::numeric_limits<double>::infinity();
  std::vector<double> mus(kCoarseScanPoints + 1);
  for (int i = 0; i <= kCoarseScanPoints; ++i) {
    mus[i] = std::exp(log_lo + (log_hi - log_lo) * i / kCoarseScanPoints);
    const double r = rate_at(mus[i]);
    if (r > best_rate) {
      best_rate = r;
      best = i;
    }
  }

  const double a = mus[std::max(0, best - 1)];
  const double b = mus[std::min(kCoarseScanPoints, best + 1)];
  const auto [mu_opt, rate_opt] = golden_section_max(rate_at, a, b, kMuTolerance);

  OptimizeResult result;
  result.mu_opt = mu_opt;
  result.rate_opt = rate_opt;
  result.positive_rate = rate_opt > 0.0;
  result.point = key_rate(at, mu_opt, protocol, mode);
  return result;
}

std::vector<double> DistanceGrid::points() const {
  if (!(step_km > 0.0)) {
    throw std::domain_error("DistanceGrid: step must be > 0");
  }
  if (!(start_km >= 0.0) || start_km > stop_km) {
    throw std::domain_error("DistanceGrid: need 0 <= start <= stop");
  }
  std::vector<double> out;
  const double eps = step_km * 1e-9;
  for (long i = 0;; ++i) {
    const double d = start_km + step_km * static_cast<double>(i);
    if (d > stop_km + eps) {
      break;
    }
    out.push_back(std::min(d, stop_km));
  }
  return out;
}

namespace {

std::optional<double> locate_zero_crossing(
    const ChannelParams& params, Protocol protocol, RateMode mode,
    const std::vector<double>& distances, const std::vector<RatePoint>& points) {
  for (std::size_t i = 0; i + 1 < distances.size(); ++i) {
    if (points[i].rate > 0.0 && points[i + 1].rate <= 0.0) {
      double lo = distances[i];
      double hi = distances[i + 1];
      while (hi - lo > kDistanceBisectTolKm) {
        const double mid = 0.5 * (lo + hi);
        if (optimize_mu(params, mid, protocol, mode).rate_opt > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
  }
  return std::nullopt;
}

std::optional<double> locate_crossover(const ChannelParams& params,
                                       RateMode mode,
                                       const std::vector<double>& distances,
                                       const std::vector<RatePoint>& bb84,
                                       const std::vector<RatePoint>& tom) {
  // Only distances where at least one protocol still has a key are
  // meaningful; past that both rates are negative diagnostics.
  std::optional<double> prev_d;
  bool prev_tom_ahead = false;
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (std::max(bb84[i].rate, tom[i].rate) <= 0.0) {
      continue;
    }
    const bool tom_ahead = tom[i].rate >= bb84[i].rate;
    if (prev_d && prev_tom_ahead && !tom_ahead) {
      double lo = *prev_d;
      double hi = distances[i];
      while (hi - lo > kDistanceBisectTolKm) {
        const double mid = 0.5 * (lo + hi);
        const double rt = optimize_mu(params, mid, Protocol::tom, mode).rate_opt;
        const double rb = optimize_mu(params, mid, Protocol::bb84, mode).rate_opt;
        if (rt >= rb) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev_d = distances[i];
    prev_tom_ahead = tom_ahead;
  }
  return std::nullopt;
}

}  // namespace

SweepResult sweep(const ChannelParams& params, const DistanceGrid& grid,
                  std::span<const Protocol> protocols, RateMode mode) {
  if (protocols.empty()) {
    throw std::domain_error("sweep: no protocols selected");
  }
  SweepResult result;
  result.mode = mode;
  result.distances_km = grid.points();

  for (Protocol protocol : protocols) {
    SweepSeries series;
    series.protocol = protocol;
    series.points.reserve(result.distances_km.size());
    for (double d : result.distances_km) {
      series.points.push_back(optimize_mu(params, d, protocol, mode).point);
    }
    series.max_distance_km = locate_zero_crossing(params, protocol, mode,
                                                  result.distances_km,
                                                  series.points);
    result.series.push_back(std::move(series));
  }

  const auto find = [&](Protocol p) -> const SweepSeries* {
    for (const SweepSeries& s : result.series) {
      if (s.protocol == p) {
        return &s;
      }
    }
    return nullptr;
  };
  const SweepSeries* bb84 = find(Protocol::bb84);
  const SweepSeries* tom = find(Protocol::tom);

  if (bb84 != nullptr && tom != nullptr) {
    result.ratio_k.resize(result.distances_km.size(),
                          std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < result.distances_km.size(); ++i) {
      if (bb84->points[i].rate > 0.0 && tom->points[i].rate > 0.0) {
        result.ratio_k[i] = tom->points[i].mu / bb84->points[i].mu;
      }
    }
    if (mode == RateMode::photon_resolved) {
      result.crossover_km = locate_crossover(params, mode, result.distances_km,
                                             bb84->points, tom->points);
    }
  }
  return result;
}

ConditionCheck check_sufficient_condition(const ChannelParams& params,
                                          double distance_km,
                                          double intensity_ratio) {
  params.validate();
  if (!(distance_km >= 0.0)) {
    throw std::domain_error("check_sufficient_condition: distance must be >= 0");
  }
  if (!(intensity_ratio > 0.0)) {
    throw std::domain_error("check_sufficient_condition: ratio must be > 0");
  }
  const double threshold =
      std::pow(10.0, params.gamma_db_per_km * distance_km / 10.0) /
      params.eta_alice;
  return {threshold, intensity_ratio > threshold};
}

}  // namespace tomqkd
