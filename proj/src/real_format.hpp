#pragma once

#include <charconv>
#include <string>

namespace infmax::detail {

// Shortest decimal representation that round-trips the exact double.
inline std::string format_real(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace infmax::detail
