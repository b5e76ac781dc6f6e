#pragma once

#include <string>

namespace multispace {

// Formats a floating-point value with `significant_digits` significant digits
// (shortest of fixed/scientific, trailing zeros trimmed — printf %g rules with
// correct rounding). The result is locale-independent: the decimal separator
// is always '.', and negative zero is normalized to "0". All CSV and report
// emission goes through this function so outputs are byte-stable across runs
// and environments.
std::string format_number(double x, int significant_digits = 12);

}  // namespace multispace
