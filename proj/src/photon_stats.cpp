#include "tomqkd/photon_stats.hpp"

#include <cmath>

namespace tomqkd {

namespace {
// 20! is the last factorial exactly representable in double.
constexpr int kDirectEvalLimit = 20;
}  // namespace

double pulse_probability(const SourceModel& source, int n) {
  if (n < 0) {
    throw std::domain_error("pulse_probability: photon count must be >= 0");
  }
  const double mu = source.mu;
  if (mu == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  if (n <= kDirectEvalLimit) {
    double factorial = 1.0;
    for (int k = 2; k <= n; ++k) {
      factorial *= static_cast<double>(k);
    }
    return std::pow(mu, n) * std::exp(-mu) / factorial;
  }
  // log-space beyond 20! so large n cannot overflow
  return std::exp(static_cast<double>(n) * std::log(mu) - mu -
                  std::lgamma(static_cast<double>(n) + 1.0));
}

double multiphoton_tail(const SourceModel& source, int threshold) {
  if (threshold < 0) {
    throw std::domain_error("multiphoton_tail: threshold must be >= 0");
  }
  double partial = 0.0;
  for (int i = 0; i < threshold; ++i) {
    partial += pulse_probability(source, i);
  }
  const double tail = 1.0 - partial;
  return tail < 0.0 ? 0.0 : tail;
}

}  // namespace tomqkd
