#pragma once

#include <cstdio>
#include <string>

namespace shinv {

// 12 significant digits, shortest form. All serialized reals go through
// this so documents are reproducible byte-for-byte.
inline std::string format_real(double value) {
  if (value == 0.0) return "0";  // also folds away the sign of -0.0
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace shinv
