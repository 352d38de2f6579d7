#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace tomqkd::csv {

// 9 significant digits, '.' decimal point, locale-independent. Keeps CSV
// output byte-identical across runs and platforms.
inline std::string format_number(double value) {
  char buffer[40];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::general, 9);
  return ec == std::errc{} ? std::string(buffer, ptr) : std::string("nan");
}

}  // namespace tomqkd::csv
