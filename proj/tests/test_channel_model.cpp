#include <doctest.h>

#include <cmath>
#include <fstream>

#include "tomqkd/channel_model.hpp"

using namespace tomqkd;

namespace {

ChannelParams gys_like() {
  ChannelParams params;
  params.gamma_db_per_km = 0.21;
  params.eta_bob = 0.045;
  params.eta_alice = 1.0;
  params.p_dark = 1.7e-6;
  params.e_det = 0.033;
  return params;
}

}  // namespace

TEST_CASE("transmittance uses the dB convention") {
  ChannelParams params = gys_like();
  CHECK(transmittance(params, 0.0) == 1.0);
  CHECK(transmittance(params, 41.0) ==
        doctest::Approx(0.13772094688939465).epsilon(1e-12));
  CHECK(1.0 / transmittance(params, 41.0) ==
        doctest::Approx(7.261060).epsilon(1e-6));
  params.gamma_db_per_km = 0.2;
  CHECK(transmittance(params, 16.0) ==
        doctest::Approx(0.4786300923226383).epsilon(1e-12));
  CHECK_THROWS_AS(transmittance(params, -1.0), std::domain_error);
}

TEST_CASE("gain and QBER at a reference point") {
  const ChannelParams params = gys_like().with_distance(20.0);
  const GainAndError ge = gain_and_qber(params, 0.1, Protocol::bb84);
  CHECK(ge.gain == doctest::Approx(0.0017110896099329432).epsilon(1e-12));
  CHECK(ge.qber == doctest::Approx(0.03346397336258217).epsilon(1e-12));
}

TEST_CASE("zero gain has no defined QBER") {
  ChannelParams params = gys_like().with_distance(10.0);
  params.p_dark = 0.0;
  CHECK_THROWS_AS(gain_and_qber(params, 0.0, Protocol::bb84),
                  std::domain_error);
  CHECK_THROWS_AS(gain_and_qber(params, -0.5, Protocol::bb84),
                  std::domain_error);
}

TEST_CASE("two-way at d equals one-way at 2d when Alice is lossless") {
  const ChannelParams params = gys_like();
  for (double d : {0.0, 5.0, 12.5, 30.0}) {
    const GainAndError tom =
        gain_and_qber(params.with_distance(d), 0.2, Protocol::tom);
    const GainAndError bb84 =
        gain_and_qber(params.with_distance(2.0 * d), 0.2, Protocol::bb84);
    CHECK(tom.gain == bb84.gain);
    CHECK(tom.qber == bb84.qber);
  }
}

TEST_CASE("gain grows with mu; QBER falls while darks dilute") {
  const ChannelParams params = gys_like().with_distance(25.0);
  double prev_gain = 0.0;
  double prev_qber = 1.0;
  for (double mu = 0.01; mu <= 1.0; mu += 0.01) {
    const GainAndError ge = gain_and_qber(params, mu, Protocol::bb84);
    CHECK(ge.gain > prev_gain);
    CHECK(ge.qber < prev_qber);
    prev_gain = ge.gain;
    prev_qber = ge.qber;
  }
}

TEST_CASE("QBER rewriting as e_det + (e0 - e_det) p_dark / p") {
  const ChannelParams params = gys_like().with_distance(30.0);
  for (double mu : {0.01, 0.1, 0.5, 1.5}) {
    for (Protocol protocol : {Protocol::bb84, Protocol::tom}) {
      const GainAndError ge = gain_and_qber(params, mu, protocol);
      const double rewritten =
          params.e_det + (params.e0 - params.e_det) * params.p_dark / ge.gain;
      CHECK(ge.qber == doctest::Approx(rewritten).epsilon(1e-12));
    }
  }
}

TEST_CASE("photon-number yields at known points") {
  // T = eta_bob at zero distance
  ChannelParams params;
  params.gamma_db_per_km = 0.0;
  params.eta_bob = 0.01;
  params.p_dark = 1e-6;
  params.e_det = 0.033;

  const PhotonYield vacuum = photon_number_yield(params, 0, Protocol::bb84);
  CHECK(vacuum.yield == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK(vacuum.error_rate == doctest::Approx(0.5).epsilon(1e-12));

  const PhotonYield single = photon_number_yield(params, 1, Protocol::bb84);
  CHECK(single.yield == doctest::Approx(0.01000099).epsilon(1e-12));
  CHECK(single.error_rate ==
        doctest::Approx(0.033046728373890985).epsilon(1e-12));

  const PhotonYield large = photon_number_yield(params, 5000, Protocol::bb84);
  CHECK(large.yield == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(large.error_rate ==
        doctest::Approx(params.e_det + params.e0 * params.p_dark).epsilon(1e-6));

  ChannelParams no_dark = params;
  no_dark.p_dark = 0.0;
  CHECK_THROWS_AS(photon_number_yield(no_dark, 0, Protocol::bb84),
                  std::domain_error);
}

TEST_CASE("Poisson-averaged yields recover the overall gain and error") {
  const ChannelParams params = gys_like().with_distance(20.0);
  for (double mu : {0.1, 0.3, 0.5}) {
    for (Protocol protocol : {Protocol::bb84, Protocol::tom}) {
      double factorial = 1.0;
      double avg_gain = 0.0;
      double avg_error_weight = 0.0;
      for (int n = 0; n <= 60; ++n) {
        if (n > 0) factorial *= n;
        const double pn = std::pow(mu, n) * std::exp(-mu) / factorial;
        const PhotonYield yn = photon_number_yield(params, n, protocol);
        avg_gain += pn * yn.yield;
        avg_error_weight += pn * yn.yield * yn.error_rate;
      }
      const GainAndError ge = gain_and_qber(params, mu, protocol);
      // the dark-count cross term is the only difference; small p_dark
      CHECK(avg_gain == doctest::Approx(ge.gain).epsilon(1e-6));
      CHECK(avg_error_weight ==
            doctest::Approx(ge.qber * ge.gain).epsilon(1e-6));
    }
  }
}

TEST_CASE("parameter validation") {
  ChannelParams params = gys_like();
  params.eta_bob = 0.0;
  CHECK_THROWS_AS(params.validate(), std::domain_error);
  params = gys_like();
  params.e0 = 0.4;
  CHECK_THROWS_AS(params.validate(), std::domain_error);
  params = gys_like();
  params.e_det = 0.6;
  CHECK_THROWS_AS(params.validate(), std::domain_error);
}

TEST_CASE("preset parsing") {
  const char* good =
      "# comment\n"
      "gamma_db_per_km = 0.21\n"
      "eta_bob = 0.045\n"
      "eta_alice = 1.0\n"
      "p_dark = 1.7e-6\n"
      "e_det = 0.033\n"
      "e0 = 0.5\n"
      "f_ec = 1.22\n";
  const ChannelParams params = parse_preset(good);
  CHECK(params.gamma_db_per_km == 0.21);
  CHECK(params.eta_bob == 0.045);
  CHECK(params.p_dark == doctest::Approx(1.7e-6));
  CHECK(params.f_ec == 1.22);
  CHECK(params.distance_km == 0.0);

  CHECK_THROWS_AS(parse_preset("gamma_db_per_km = 0.2\nwavelength = 1550\n"),
                  PresetError);
  CHECK_THROWS_AS(parse_preset("gamma_db_per_km = 0.2\n"), PresetError);
  CHECK_THROWS_AS(
      parse_preset(std::string(good) + "gamma_db_per_km = 0.3\n"),
      PresetError);
  CHECK_THROWS_AS(parse_preset(std::string(good) + "garbage line\n"),
                  PresetError);
  std::string bad_value(good);
  bad_value.replace(bad_value.find("0.21"), 4, "zz21");
  CHECK_THROWS_AS(parse_preset(bad_value), PresetError);
}

TEST_CASE("bundled presets load and validate") {
  const ChannelParams gys = load_preset(TOMQKD_PRESET_DIR "/gys.preset");
  CHECK(gys.gamma_db_per_km == 0.21);
  CHECK(gys.eta_bob == 0.045);
  const ChannelParams kth = load_preset(TOMQKD_PRESET_DIR "/kth.preset");
  CHECK(kth.gamma_db_per_km == 0.2);
  CHECK(kth.eta_bob == 0.143);
  CHECK_THROWS_AS(load_preset(TOMQKD_PRESET_DIR "/missing.preset"), PresetError);
}
