#include <doctest.h>

#include <cmath>

#include "tomqkd/attack_models.hpp"
#include "tomqkd/keyrate_engine.hpp"

using namespace tomqkd;

namespace {

const ChannelParams kGys = load_preset(TOMQKD_PRESET_DIR "/gys.preset");
const ChannelParams kKth = load_preset(TOMQKD_PRESET_DIR "/kth.preset");

}  // namespace

TEST_CASE("beta fractions at known points") {
  CHECK(beta_fraction(1.0, SourceModel(1e-9), Protocol::bb84) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(beta_fraction(0.01, SourceModel(0.1), Protocol::bb84) ==
        doctest::Approx(0.5321159839555492).epsilon(1e-12));
  // heavy three-photon tail: negative fraction reported as-is
  CHECK(beta_fraction(0.01, SourceModel(0.5), Protocol::tom) ==
        doctest::Approx(-0.4387677966970602).epsilon(1e-12));
  CHECK_THROWS_AS(beta_fraction(0.0, SourceModel(0.1), Protocol::bb84),
                  std::domain_error);
}

TEST_CASE("pessimistic rate combiner edge cases") {
  // perfect channel: no error correction, no privacy amplification
  CHECK(pessimistic_rate_from(0.02, 0.0, 1.0, 1.22) ==
        doctest::Approx(0.01).epsilon(1e-15));
  // non-positive beta: the whole key is surrendered, only EC cost remains
  const double qber = 0.05;
  const double expected = 0.5 * 0.02 * (-1.22 * binary_entropy(qber));
  CHECK(pessimistic_rate_from(0.02, qber, -0.3, 1.22) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(pessimistic_rate_from(0.02, qber, 0.0, 1.22) ==
        doctest::Approx(expected).epsilon(1e-12));
  // tiny beta pushes e/beta past 1/2 where tau saturates at 1
  CHECK(pessimistic_rate_from(0.02, qber, 1e-6, 1.22) ==
        doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("pessimistic rates: frozen reference points") {
  const RatePoint gb =
      key_rate_pessimistic(kGys.with_distance(20.0), 0.05, Protocol::bb84);
  CHECK(gb.rate == doctest::Approx(-0.00011169343384467832).epsilon(1e-10));
  CHECK(gb.gain == doctest::Approx(0.0008567603690838931).epsilon(1e-12));
  CHECK(gb.qber == doctest::Approx(0.033926630162467594).epsilon(1e-12));
  CHECK(gb.beta == doctest::Approx(-0.4112514045708103).epsilon(1e-10));

  const RatePoint gt =
      key_rate_pessimistic(kGys.with_distance(20.0), 0.15, Protocol::tom);
  CHECK(gt.rate == doctest::Approx(3.115164299314329e-05).epsilon(1e-10));
  CHECK(gt.beta == doctest::Approx(0.485244734539368).epsilon(1e-10));

  const RatePoint kb =
      key_rate_pessimistic(kKth.with_distance(10.0), 0.05, Protocol::bb84);
  CHECK(kb.rate == doctest::Approx(0.0005502280362161282).epsilon(1e-10));
  CHECK(kb.gain == doctest::Approx(0.0048011841815348896).epsilon(1e-12));
  CHECK(kb.qber == doctest::Approx(0.04249247736903053).epsilon(1e-12));

  const RatePoint kt =
      key_rate_pessimistic(kKth.with_distance(10.0), 0.2, Protocol::tom);
  CHECK(kt.rate == doctest::Approx(0.0032933977758913217).epsilon(1e-10));
  CHECK(kt.beta == doctest::Approx(0.9011743873416205).epsilon(1e-10));
}

TEST_CASE("photon-resolved rates: frozen reference points") {
  CHECK(key_rate_photon_resolved(kGys.with_distance(20.0), 0.5, Protocol::bb84)
            .rate == doctest::Approx(0.0010545844132353948).epsilon(1e-10));
  CHECK(key_rate_photon_resolved(kGys.with_distance(20.0), 0.5, Protocol::tom)
            .rate == doctest::Approx(0.0009104897822995639).epsilon(1e-10));
  CHECK(key_rate_photon_resolved(kKth.with_distance(25.0), 0.5, Protocol::bb84)
            .rate == doctest::Approx(0.004486512003819421).epsilon(1e-10));
  CHECK(key_rate_photon_resolved(kKth.with_distance(25.0), 0.5, Protocol::tom)
            .rate == doctest::Approx(0.002181909792842155).epsilon(1e-10));
}

TEST_CASE("single-photon limit without noise gives R = p_1 / 2") {
  ChannelParams params = kGys.with_distance(15.0);
  params.p_dark = 0.0;
  params.e_det = 0.0;
  const double mu = 0.2;
  const RatePoint point = key_rate_photon_resolved(params, mu, Protocol::bb84);
  const double p1 = photon_number_yield(params, 1, Protocol::bb84).yield *
                    pulse_probability(SourceModel(mu), 1);
  CHECK(point.rate == doctest::Approx(0.5 * p1).epsilon(1e-12));
}

TEST_CASE("vanishing source kills the resolved rate") {
  const RatePoint point =
      key_rate_photon_resolved(kKth.with_distance(15.0), 1e-6, Protocol::bb84);
  CHECK(point.rate <= 0.0);
}

TEST_CASE("rate never exceeds half the gain") {
  for (double d : {1.0, 10.0, 25.0}) {
    for (double mu : {0.05, 0.2, 0.8}) {
      for (Protocol protocol : {Protocol::bb84, Protocol::tom}) {
        for (RateMode mode :
             {RateMode::pessimistic, RateMode::photon_resolved}) {
          const RatePoint point =
              key_rate(kKth.with_distance(d), mu, protocol, mode);
          CHECK(point.rate <= 0.5 * point.gain + 1e-15);
        }
      }
    }
  }
}

TEST_CASE("rates are continuous in mu") {
  for (Protocol protocol : {Protocol::bb84, Protocol::tom}) {
    for (RateMode mode : {RateMode::pessimistic, RateMode::photon_resolved}) {
      double prev = key_rate(kGys.with_distance(20.0), 1e-3, protocol, mode).rate;
      for (double mu = 2e-3; mu <= 2.0; mu += 1e-3) {
        const double cur =
            key_rate(kGys.with_distance(20.0), mu, protocol, mode).rate;
        CHECK(std::abs(cur - prev) < 5e-3);  // no jumps on a fine grid
        prev = cur;
      }
    }
  }
}
