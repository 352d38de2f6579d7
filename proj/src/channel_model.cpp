#include "tomqkd/channel_model.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace tomqkd {

const char* protocol_name(Protocol protocol) {
  return protocol == Protocol::bb84 ? "bb84" : "tom";
}

void ChannelParams::validate() const {
  if (!(gamma_db_per_km >= 0.0)) {
    throw std::domain_error("ChannelParams: gamma_db_per_km must be >= 0");
  }
  if (!(distance_km >= 0.0)) {
    throw std::domain_error("ChannelParams: distance_km must be >= 0");
  }
  if (!(eta_bob > 0.0 && eta_bob <= 1.0)) {
    throw std::domain_error("ChannelParams: eta_bob must be in (0, 1]");
  }
  if (!(eta_alice > 0.0 && eta_alice <= 1.0)) {
    throw std::domain_error("ChannelParams: eta_alice must be in (0, 1]");
  }
  if (!(p_dark >= 0.0 && p_dark < 1.0)) {
    throw std::domain_error("ChannelParams: p_dark must be in [0, 1)");
  }
  if (!(e_det >= 0.0 && e_det <= 0.5)) {
    throw std::domain_error("ChannelParams: e_det must be in [0, 0.5]");
  }
  if (e0 != 0.5) {
    throw std::domain_error("ChannelParams: e0 is fixed at 0.5");
  }
  if (!(f_ec >= 1.0)) {
    throw std::domain_error("ChannelParams: f_ec must be >= 1");
  }
}

ChannelParams ChannelParams::with_distance(double km) const {
  ChannelParams out = *this;
  out.distance_km = km;
  return out;
}

ChannelParams ChannelParams::with_eta_alice(double value) const {
  ChannelParams out = *this;
  out.eta_alice = value;
  return out;
}

double transmittance(const ChannelParams& params, double path_length_km) {
  if (!(path_length_km >= 0.0)) {
    throw std::domain_error("transmittance: path length must be >= 0");
  }
  return std::pow(10.0, -params.gamma_db_per_km * path_length_km / 10.0);
}

double effective_transmission(const ChannelParams& params, Protocol protocol) {
  if (protocol == Protocol::bb84) {
    return params.eta_bob * transmittance(params, params.distance_km);
  }
  // Round trip: path length 2d. Writing t(2d) instead of t(d)^2 keeps the
  // equivalence with BB84 at doubled distance exact in floating point.
  return params.eta_bob * params.eta_alice *
         transmittance(params, 2.0 * params.distance_km);
}

GainAndError gain_and_qber(const ChannelParams& params, double mu,
                           Protocol protocol) {
  params.validate();
  if (!(mu >= 0.0)) {
    throw std::domain_error("gain_and_qber: mu must be >= 0");
  }
  const double transmission = effective_transmission(params, protocol);
  const double signal = 1.0 - std::exp(-mu * transmission);
  const double gain = params.p_dark + signal;
  if (gain <= 0.0) {
    throw std::domain_error("gain_and_qber: zero gain, QBER undefined");
  }
  const double qber = (params.e0 * params.p_dark + params.e_det * signal) / gain;
  return {gain, qber};
}

PhotonYield photon_number_yield(const ChannelParams& params, int photons,
                                Protocol protocol) {
  params.validate();
  if (photons < 0) {
    throw std::domain_error("photon_number_yield: photon count must be >= 0");
  }
  const double transmission = effective_transmission(params, protocol);
  const double eta_i = 1.0 - std::pow(1.0 - transmission, photons);
  const double yield = params.p_dark + eta_i - params.p_dark * eta_i;
  if (yield <= 0.0) {
    throw std::domain_error("photon_number_yield: zero yield, error rate undefined");
  }
  const double error_rate =
      (params.e0 * params.p_dark + params.e_det * eta_i) / yield;
  return {yield, error_rate};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_value(std::string_view text, std::string_view key) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw PresetError("preset: bad numeric value for key '" + std::string(key) + "'");
  }
  return value;
}

}  // namespace

ChannelParams parse_preset(std::string_view text) {
  static constexpr std::array<std::string_view, 7> kKeys = {
      "gamma_db_per_km", "eta_bob", "eta_alice", "p_dark",
      "e_det",           "e0",      "f_ec"};

  std::map<std::string, double, std::less<>> values;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw PresetError("preset line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    bool known = false;
    for (std::string_view k : kKeys) {
      known = known || k == key;
    }
    if (!known) {
      throw PresetError("preset: unknown key '" + std::string(key) + "'");
    }
    if (values.count(key) != 0) {
      throw PresetError("preset: duplicate key '" + std::string(key) + "'");
    }
    values.emplace(std::string(key), parse_value(value, key));
  }

  for (std::string_view k : kKeys) {
    if (values.find(k) == values.end()) {
      throw PresetError("preset: missing key '" + std::string(k) + "'");
    }
  }

  ChannelParams params;
  params.gamma_db_per_km = values.find("gamma_db_per_km")->second;
  params.eta_bob = values.find("eta_bob")->second;
  params.eta_alice = values.find("eta_alice")->second;
  params.p_dark = values.find("p_dark")->second;
  params.e_det = values.find("e_det")->second;
  params.e0 = values.find("e0")->second;
  params.f_ec = values.find("f_ec")->second;
  params.distance_km = 0.0;
  try {
    params.validate();
  } catch (const std::domain_error& err) {
    throw PresetError(std::string("preset: ") + err.what());
  }
  return params;
}

ChannelParams load_preset(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw PresetError("preset: cannot open '" + file.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_preset(buffer.str());
}

}  // namespace tomqkd
