#include "tomqkd/keyrate_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tomqkd/attack_models.hpp"
#include "tomqkd/privacy_amplification.hpp"

namespace tomqkd {

const char* rate_mode_name(RateMode mode) {
  return mode == RateMode::pessimistic ? "pessimistic" : "resolved";
}

double beta_fraction(double gain, const SourceModel& source,
                     Protocol protocol) {
  if (!(gain > 0.0)) {
    throw std::domain_error("beta_fraction: gain must be > 0");
  }
  const int threshold = (protocol == Protocol::bb84) ? 2 : 3;
  return (gain - multiphoton_tail(source, threshold)) / gain;
}

double pessimistic_rate_from(double gain, double qber, double beta,
                             double f_ec) {
  double pa_term = 0.0;
  if (beta > 0.0) {
    pa_term = beta * (1.0 - tau_lutkenhaus(std::min(qber / beta, 1.0)));
  }
  return 0.5 * gain * (-f_ec * binary_entropy(qber) + pa_term);
}

RatePoint key_rate_pessimistic(const ChannelParams& params, double mu,
                               Protocol protocol) {
  const GainAndError ge = gain_and_qber(params, mu, protocol);
  const double beta = beta_fraction(ge.gain, SourceModel(mu), protocol);
  const double rate = pessimistic_rate_from(ge.gain, ge.qber, beta, params.f_ec);
  return {params.distance_km, mu, ge.gain, ge.qber, beta, rate};
}

RatePoint key_rate_photon_resolved(const ChannelParams& params, double mu,
                                   Protocol protocol) {
  const GainAndError ge = gain_and_qber(params, mu, protocol);
  const SourceModel source(mu);

  const double ec_cost = -ge.gain * params.f_ec * binary_entropy(ge.qber);
  const auto [y1, e1] = photon_number_yield(params, 1, protocol);
  const double p1 = y1 * pulse_probability(source, 1);

  double rate = 0.0;
  if (protocol == Protocol::bb84) {
    rate = 0.5 * (ec_cost + p1 * (1.0 - tau_lutkenhaus(e1)));
  } else {
    const auto [y2, e2] = photon_number_yield(params, 2, protocol);
    const double p2 = y2 * pulse_probability(source, 2);
    // tau_t is defined only up to e = 1/4; a single-photon error rate past
    // that point forfeits the whole single-photon contribution.
    const double single =
        (e1 <= 0.25) ? p1 * (1.0 - tau_tom(e1)) : 0.0;
    rate = 0.5 * (ec_cost + single + p2 * (1.0 - tau_lutkenhaus(e2)));
  }
  const double beta = beta_fraction(ge.gain, source, protocol);
  return {params.distance_km, mu, ge.gain, ge.qber, beta, rate};
}

RatePoint key_rate(const ChannelParams& params, double mu, Protocol protocol,
                   RateMode mode) {
  return mode == RateMode::pessimistic
             ? key_rate_pessimistic(params, mu, protocol)
             : key_rate_photon_resolved(params, mu, protocol);
}

}  // namespace tomqkd
