#pragma once

#include <charconv>
#include <string>

namespace gwcx::detail {

// Shortest representation that parses back to the same double.
inline std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace gwcx::detail
