#include "tomqkd/privacy_amplification.hpp"

#include <cmath>
#include <stdexcept>

#include "tomqkd/attack_models.hpp"

namespace tomqkd {

double tau_lutkenhaus(double e) {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw std::domain_error("tau_lutkenhaus: error rate outside [0, 1]");
  }
  if (e >= 0.5) {
    return 1.0;
  }
  return std::log2(1.0 + 4.0 * e - 4.0 * e * e);
}

double tau_tom(double e) {
  if (!(e >= 0.0 && e <= 0.25)) {
    throw std::domain_error("tau_tom: error rate outside [0, 1/4]");
  }
  return 2.0 * e;
}

double renyi_entropy_order2(std::span<const double> probabilities) {
  double sum = 0.0;
  double collision = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) {
      throw std::domain_error("renyi_entropy_order2: negative probability");
    }
    sum += p;
    collision += p * p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::domain_error("renyi_entropy_order2: probabilities must sum to 1");
  }
  return -std::log2(collision);
}

double two_photon_renyi_gain(double alpha) {
  if (!(alpha >= 0.0 && alpha <= kHalfPi)) {
    throw std::domain_error("two_photon_renyi_gain: angle outside [0, pi/2]");
  }
  const double s = std::sin(alpha);
  const double hi = (1.0 + s) / 2.0;
  const double lo = (1.0 - s) / 2.0;
  return 1.0 + std::log2(hi * hi + lo * lo);
}

}  // namespace tomqkd
