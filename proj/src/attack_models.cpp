#include "tomqkd/attack_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tomqkd {

namespace {

void require_angle(double theta, const char* what) {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw std::domain_error(std::string(what) + ": angle outside [0, pi/2]");
  }
}

}  // namespace

AttackAngles::AttackAngles(double forward, double backward)
    : alpha(forward), beta(backward) {
  require_angle(alpha, "AttackAngles.alpha");
  require_angle(beta, "AttackAngles.beta");
}

PathFidelities path_fidelities(double theta) {
  require_angle(theta, "path_fidelities");
  return {(1.0 + std::cos(theta)) / 2.0, (1.0 + std::sin(theta)) / 2.0};
}

double eve_fidelity_two_way(const AttackAngles& angles) {
  require_angle(angles.alpha, "eve_fidelity_two_way");
  require_angle(angles.beta, "eve_fidelity_two_way");
  return (1.0 + std::sin(angles.alpha) * std::sin(angles.beta)) / 2.0;
}

double ab_fidelity_two_way(const AttackAngles& angles) {
  require_angle(angles.alpha, "ab_fidelity_two_way");
  require_angle(angles.beta, "ab_fidelity_two_way");
  return (1.0 + std::cos(angles.alpha) * std::cos(angles.beta)) / 2.0;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: probability outside [0, 1]");
  }
  if (p == 0.0 || p == 1.0) {
    return 0.0;
  }
  return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

InfoCurves mutual_info_curves(double disturbance) {
  const double e = disturbance;
  if (!(e >= 0.0 && e <= 0.5)) {
    throw std::domain_error("mutual_info_curves: disturbance outside [0, 1/2]");
  }
  InfoCurves curves{};
  curves.i_ab = 1.0 - binary_entropy(e);
  curves.i_tom = 1.0 - binary_entropy((1.0 - 2.0 * e) / 2.0);
  curves.i_ir = (e <= 0.25) ? std::optional<double>(4.0 * e) : std::nullopt;
  curves.i_bb84 =
      1.0 - binary_entropy((1.0 - 2.0 * std::sqrt(e * (1.0 - e))) / 2.0);
  return curves;
}

EqualAngleReport verify_equal_angle_optimality(double phi, int resolution) {
  require_angle(phi, "verify_equal_angle_optimality");
  if (resolution < 100) {
    throw std::domain_error(
        "verify_equal_angle_optimality: resolution must be >= 100");
  }

  const double cos_phi = std::cos(phi);
  const double c2 = cos_phi * cos_phi;
  // The constraint cos(a) cos(b) = c2 restricts a to [0, acos(c2)]; every
  // admissible pair appears once as a runs over that range.
  const double alpha_hi = std::acos(std::min(1.0, c2));
  const double step = alpha_hi / static_cast<double>(resolution);

  EqualAngleReport report{};
  report.phi = phi;
  report.resolution = resolution;
  report.grid_step = step;
  report.max_fidelity = -1.0;
  const double sin_phi = std::sin(phi);
  report.equal_angle_fidelity = (1.0 + sin_phi * sin_phi) / 2.0;

  for (int j = 0; j <= resolution; ++j) {
    const double a = (j == resolution) ? alpha_hi : step * j;
    const double ca = std::cos(a);
    // ca == 0 implies c2 == 0 (a stays below pi/2 otherwise); the
    // constraint is then met by any b, and b = pi/2 dominates.
    const double b =
        (ca > 0.0) ? std::acos(std::min(1.0, c2 / ca)) : kHalfPi;
    const double fidelity = (1.0 + std::sin(a) * std::sin(b)) / 2.0;
    if (fidelity > report.max_fidelity) {
      report.max_fidelity = fidelity;
      report.alpha_at_max = a;
      report.beta_at_max = b;
    }
  }
  return report;
}

}  // namespace tomqkd
