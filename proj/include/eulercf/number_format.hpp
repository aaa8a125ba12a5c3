#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace eulercf {

/// Shortest decimal that parses back to the same double; "nan", "inf" and
/// "-inf" for non-finite values.
inline std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

}  // namespace eulercf
