#include "multispace/numformat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace multispace {

std::string format_number(double x, int significant_digits) {
  if (significant_digits < 1 || significant_digits > 17) {
    throw std::invalid_argument("format_number: significant_digits must be in [1,17]");
  }
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // collapses -0.0 as well

  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, x);
  std::string s(buf);
  // snprintf honors the C locale set by the host process; normalize a comma
  // decimal separator defensively so output never depends on the environment.
  std::replace(s.begin(), s.end(), ',', '.');
  if (s == "-0") s = "0";
  return s;
}

}  // namespace multispace
