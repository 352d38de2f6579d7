#pragma once

#include <optional>

namespace tomqkd {

inline constexpr double kHalfPi = 1.5707963267948966;

// Eve's ancilla interaction strengths on the forward and backward path,
// both restricted to [0, pi/2].
struct AttackAngles {
  double alpha = 0.0;
  double beta = 0.0;

  AttackAngles() = default;
  AttackAngles(double forward, double backward);
};

// Per-path state fidelities after an interaction of strength theta:
// the legitimate party keeps the state with (1 + cos theta)/2 while Eve
// guesses it with (1 + sin theta)/2.
struct PathFidelities {
  double bob_fidelity;
  double eve_fidelity;
};
PathFidelities path_fidelities(double theta);

// Eve decodes the encoding from the XOR of her two path guesses, so she
// succeeds when both are right or both are wrong: (1 + sin a sin b)/2.
double eve_fidelity_two_way(const AttackAngles& angles);

// Probability that Alice and Bob still share the bit: (1 + cos a cos b)/2.
// Disturbance is 1 minus this.
double ab_fidelity_two_way(const AttackAngles& angles);

// -p log2 p - (1-p) log2(1-p), with 0 log 0 == 0.
double binary_entropy(double p);

// Eve-information curves at disturbance e, all derived from the per-path
// fidelity model above:
//   i_ab   = 1 - h(e), the Alice-Bob channel capacity per sifted bit.
//   i_tom  = equal-angle two-way ancilla attack: e = sin^2(a)/2 and Eve's
//            XOR-guess fidelity (1 + sin^2 a)/2 give 1 - h((1 - 2e)/2).
//   i_ir   = intercept-resend on a fraction x of the pulses induces
//            e = x/4 with complete knowledge of the attacked fraction,
//            so i_ir = 4e; defined only for e <= 1/4.
//   i_bb84 = optimal individual one-way attack: e = (1 - cos a)/2 with Eve
//            fidelity (1 + sin a)/2 give 1 - h((1 - 2 sqrt(e(1-e)))/2).
struct InfoCurves {
  double i_ab;
  double i_tom;
  std::optional<double> i_ir;
  double i_bb84;
};
InfoCurves mutual_info_curves(double disturbance);

struct EqualAngleReport {
  double phi;
  int resolution;
  double grid_step;              // alpha spacing along the constraint curve
  double max_fidelity;
  double alpha_at_max;
  double beta_at_max;
  double equal_angle_fidelity;   // (1 + sin^2 phi)/2
};

// Grid search over every (alpha, beta) pair with cos(a) cos(b) = cos^2(phi),
// i.e. pairs of equal disturbance. Corroborates numerically that Eve's
// fidelity is maximized at alpha == beta == phi.
EqualAngleReport verify_equal_angle_optimality(double phi, int resolution);

}  // namespace tomqkd
