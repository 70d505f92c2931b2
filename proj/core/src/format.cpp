#include "platekit/format.hpp"

#include <cmath>
#include <cstdio>

namespace platekit {

std::string format_number(double value, int digits) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace platekit
