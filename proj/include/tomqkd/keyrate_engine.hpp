#pragma once

#include "tomqkd/channel_model.hpp"
#include "tomqkd/photon_stats.hpp"

namespace tomqkd {

enum class RateMode { pessimistic, photon_resolved };

const char* rate_mode_name(RateMode mode);

// One evaluated operating point. rate may be <= 0 (no secure key); beta may
// be negative when the multiphoton tail exceeds the gain.
struct RatePoint {
  double distance_km;
  double mu;
  double gain;
  double qber;
  double beta;  // PNS-safe fraction of detections
  double rate;  // secure bits per pulse
};

// Fraction of detections attributable to PNS-safe photon numbers:
// single photons for BB84, up to two photons for the two-way protocol
// (three or more allow a conclusive split after basis revelation).
// Returned as-is when negative; the key contribution is then zero.
double beta_fraction(double gain, const SourceModel& source, Protocol protocol);

// G = gain/2 * [ -f_ec h(e) + beta (1 - tau(e / beta)) ], with the beta term
// floored at zero for beta <= 0. tau's argument is clamped to 1 since tau is
// identically 1 from 1/2 on.
double pessimistic_rate_from(double gain, double qber, double beta,
                             double f_ec);

// Single-photon-pessimistic secure rate: every multiphoton detection is
// surrendered to the eavesdropper.
RatePoint key_rate_pessimistic(const ChannelParams& params, double mu,
                               Protocol protocol);

// Photon-number-resolved rate (infinite-decoy limit): contributions are
// credited per photon number with p_i = y_i * mu^i e^{-mu} / i!.
//   bb84: R = 1/2 [ -p f h(e) + p_1 (1 - tau(e_1)) ]
//   tom:  R = 1/2 [ -p f h(e) + p_1 (1 - tau_t(e_1)) + p_2 (1 - tau(e_2)) ]
// The tau_t term is dropped when e_1 exceeds its 1/4 domain.
RatePoint key_rate_photon_resolved(const ChannelParams& params, double mu,
                                   Protocol protocol);

RatePoint key_rate(const ChannelParams& params, double mu, Protocol protocol,
                   RateMode mode);

}  // namespace tomqkd
