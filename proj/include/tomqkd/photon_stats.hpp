#pragma once

#include <stdexcept>

namespace tomqkd {

// Poissonian pulse statistics of a weak coherent source.
struct SourceModel {
  double mu = 0.0;  // mean photon number per pulse

  SourceModel() = default;
  explicit SourceModel(double mean_photon_number) : mu(mean_photon_number) {
    if (!(mu >= 0.0)) {
      throw std::domain_error("SourceModel: mean photon number must be >= 0");
    }
  }
};

// P_n = mu^n e^{-mu} / n!
double pulse_probability(const SourceModel& source, int n);

// P(n >= threshold) = 1 - sum_{i < threshold} P_i, in [0, 1].
double multiphoton_tail(const SourceModel& source, int threshold);

}  // namespace tomqkd
