#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tomqkd {

enum class Protocol { bb84, tom };

const char* protocol_name(Protocol protocol);

// Fiber-channel and detector parameters. The same record carries the
// error-correction inefficiency f_ec so a preset file loads in one piece.
struct ChannelParams {
  double gamma_db_per_km = 0.2;  // fiber loss coefficient
  double distance_km = 0.0;      // Alice-Bob separation
  double eta_bob = 0.1;          // Bob-side optics x detector efficiency
  double eta_alice = 1.0;        // Alice-side transmitivity (two-way only)
  double p_dark = 0.0;           // dark-count probability per pulse
  double e_det = 0.0;            // misalignment/stability error probability
  double e0 = 0.5;               // dark-count error fraction, fixed
  double f_ec = 1.22;            // error-correction inefficiency

  void validate() const;
  ChannelParams with_distance(double km) const;
  ChannelParams with_eta_alice(double value) const;
};

// t = 10^(-gamma * L / 10), the dB convention.
double transmittance(const ChannelParams& params, double path_length_km);

// Per-photon transmission seen by the protocol: eta_bob * t(d) one way,
// eta_bob * eta_alice * t(2d) for the round trip (Alice's optics count once).
double effective_transmission(const ChannelParams& params, Protocol protocol);

struct GainAndError {
  double gain;  // detection probability per pulse
  double qber;  // error probability per detected pulse
};

// gain = p_dark + 1 - e^(-mu T); qber = (e0 p_dark + e_det (1 - e^(-mu T))) / gain.
// Throws when the gain vanishes (p_dark = 0 and mu T = 0): the QBER is
// undefined without detections.
GainAndError gain_and_qber(const ChannelParams& params, double mu,
                           Protocol protocol);

struct PhotonYield {
  double yield;       // y_i = p_dark + eta_i - p_dark eta_i
  double error_rate;  // e_i = (e0 p_dark + e_det eta_i) / y_i
};

// Photon-number-resolved yield and error rate with eta_i = 1 - (1 - T)^i,
// T the protocol's full per-photon transmission.
PhotonYield photon_number_yield(const ChannelParams& params, int photons,
                                Protocol protocol);

struct PresetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Preset files are flat `key = value` text with '#' comments. The key set is
// exactly {gamma_db_per_km, eta_bob, eta_alice, p_dark, e_det, e0, f_ec};
// unknown, duplicate, or missing keys fail the load.
ChannelParams parse_preset(std::string_view text);
ChannelParams load_preset(const std::filesystem::path& file);

}  // namespace tomqkd
