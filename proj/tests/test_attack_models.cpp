#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tomqkd/attack_models.hpp"

using namespace tomqkd;

TEST_CASE("two-way fidelities at known points") {
  CHECK(eve_fidelity_two_way({0.0, 0.0}) == 0.5);
  CHECK(eve_fidelity_two_way({kHalfPi, kHalfPi}) == doctest::Approx(1.0));
  // sin a = 0.6 on both paths
  const double a = std::asin(0.6);
  CHECK(eve_fidelity_two_way({a, a}) == doctest::Approx(0.68).epsilon(1e-12));

  CHECK(ab_fidelity_two_way({0.0, 0.0}) == 1.0);
  CHECK(ab_fidelity_two_way({kHalfPi, kHalfPi}) == doctest::Approx(0.5));
  const double b = std::acos(0.8);
  CHECK(ab_fidelity_two_way({b, b}) == doctest::Approx(0.82).epsilon(1e-12));
}

TEST_CASE("angle range is enforced") {
  CHECK_THROWS_AS(AttackAngles(-0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(AttackAngles(0.0, 1.8), std::domain_error);
  AttackAngles bad;
  bad.alpha = 2.0;
  CHECK_THROWS_AS(eve_fidelity_two_way(bad), std::domain_error);
  CHECK_THROWS_AS(path_fidelities(-0.5), std::domain_error);
}

TEST_CASE("equal angles reduce to the single-angle forms") {
  for (int i = 0; i <= 1000; ++i) {
    const double a = kHalfPi * i / 1000;
    const AttackAngles angles{a, a};
    const double s = std::sin(a);
    const double c = std::cos(a);
    // identical expressions, so equality is exact
    CHECK(eve_fidelity_two_way(angles) == (1.0 + s * s) / 2.0);
    CHECK(ab_fidelity_two_way(angles) == (1.0 + c * c) / 2.0);
  }
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.25) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.01), std::domain_error);
}

TEST_CASE("information curves at known points") {
  const InfoCurves at_zero = mutual_info_curves(0.0);
  CHECK(at_zero.i_ab == 1.0);
  CHECK(at_zero.i_tom == doctest::Approx(0.0));
  CHECK(at_zero.i_ir.value() == 0.0);
  CHECK(at_zero.i_bb84 == doctest::Approx(0.0));

  CHECK(mutual_info_curves(0.25).i_ir.value() == doctest::Approx(1.0));
  CHECK_FALSE(mutual_info_curves(0.26).i_ir.has_value());

  const InfoCurves at_tenth = mutual_info_curves(0.1);
  CHECK(at_tenth.i_tom ==
        doctest::Approx(0.02904940554533142).epsilon(1e-12));
  CHECK(at_tenth.i_bb84 ==
        doctest::Approx(0.2780719051126377).epsilon(1e-12));

  CHECK_THROWS_AS(mutual_info_curves(-0.01), std::domain_error);
  CHECK_THROWS_AS(mutual_info_curves(0.51), std::domain_error);
}

TEST_CASE("intercept-resend dominates below e = 1/4; two-way trails bb84") {
  for (int i = 1; i < 500; ++i) {
    const double e = 0.25 * i / 500;
    const InfoCurves curves = mutual_info_curves(e);
    CHECK(curves.i_ir.value() >= curves.i_tom);
    CHECK(curves.i_ir.value() >= curves.i_bb84);
  }
  for (int i = 1; i < 1000; ++i) {
    const double e = 0.5 * i / 1000;
    const InfoCurves curves = mutual_info_curves(e);
    CHECK(curves.i_tom <= curves.i_bb84);
  }
}

TEST_CASE("equal-angle optimality on the constraint grid") {
  SUBCASE("phi = 0 forces the trivial attack") {
    const EqualAngleReport report = verify_equal_angle_optimality(0.0, 500);
    CHECK(report.max_fidelity == doctest::Approx(0.5));
    CHECK(report.alpha_at_max == 0.0);
    CHECK(report.beta_at_max == 0.0);
  }
  SUBCASE("phi = pi/4") {
    const double phi = kHalfPi / 2.0;
    const EqualAngleReport report = verify_equal_angle_optimality(phi, 1000);
    CHECK(std::abs(report.alpha_at_max - phi) <= report.grid_step * 1.000001);
    CHECK(std::abs(report.beta_at_max - phi) <= report.grid_step * 1.000001);
    CHECK(report.max_fidelity == doctest::Approx(0.75).epsilon(1e-4));
    CHECK(report.max_fidelity <= report.equal_angle_fidelity + 1e-15);
  }
  SUBCASE("phi = pi/2 reaches full fidelity") {
    const EqualAngleReport report = verify_equal_angle_optimality(kHalfPi, 500);
    CHECK(report.max_fidelity == doctest::Approx(1.0));
    CHECK(report.alpha_at_max == doctest::Approx(kHalfPi));
    CHECK(report.beta_at_max == doctest::Approx(kHalfPi));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(verify_equal_angle_optimality(0.3, 50), std::domain_error);
    CHECK_THROWS_AS(verify_equal_angle_optimality(2.0, 500), std::domain_error);
  }
}

TEST_CASE("no equal-disturbance pair beats the equal-angle fidelity") {
  for (int i = 0; i <= 20; ++i) {
    const double phi = kHalfPi * i / 20;
    const EqualAngleReport report = verify_equal_angle_optimality(phi, 400);
    CHECK(report.max_fidelity <= report.equal_angle_fidelity + 1e-15);
    const double tolerance = kHalfPi / 400;
    CHECK(report.max_fidelity >= report.equal_angle_fidelity - tolerance);
  }
}
