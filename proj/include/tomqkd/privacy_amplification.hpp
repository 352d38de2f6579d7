#pragma once

#include <span>

namespace tomqkd {

// Privacy-amplification fraction against optimal individual attacks:
// log2(1 + 4e - 4e^2) for e < 1/2, and 1 from 1/2 on.
double tau_lutkenhaus(double e);

// Renyi gain of a both-path intercept-resend attack, 2e. Defined only on
// e in [0, 1/4] (the attack cannot push the error rate further); out of
// range is a hard error rather than a clamp.
double tau_tom(double e);

// Order-2 Renyi entropy -log2 sum p_i^2 of a probability distribution.
double renyi_entropy_order2(std::span<const double> probabilities);

// Renyi information Eve gains on a two-photon pulse when she holds one
// photon until bases are revealed: 1 + log2 of her collision probability.
// Coincides with tau_lutkenhaus at disturbance (1 - cos alpha)/2.
double two_photon_renyi_gain(double alpha);

}  // namespace tomqkd
