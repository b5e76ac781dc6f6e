#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "multispace/numformat.hpp"

using multispace::format_number;

TEST_CASE("format_number uses up to 12 significant digits and trims trailing noise") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.25) == "1.25");
  CHECK(format_number(-0.75) == "-0.75");
  CHECK(format_number(4.0 / 3.0) == "1.33333333333");
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
}

TEST_CASE("format_number rounds correctly, not away from zero") {
  // 0.8660254037844386: the 13th digit is 4, so the 12th stays 4.
  CHECK(format_number(std::sqrt(3.0) / 2.0) == "0.866025403784");
  // 0.2963961012123931: digit 13 is 3, so the tail keeps ...212.
  CHECK(format_number(0.2963961012123931) == "0.296396101212");
  CHECK(format_number(-0.3582575694955840) == "-0.358257569496");
}

TEST_CASE("format_number special values") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("format_number honors the digit-count argument") {
  CHECK(format_number(4.0 / 3.0, 3) == "1.33");
  CHECK(format_number(123456.0, 3) == "1.23e+05");
  CHECK(format_number(0.1, 17) == "0.10000000000000001");
  CHECK_THROWS_AS(format_number(1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(format_number(1.0, 18), std::invalid_argument);
}

TEST_CASE("format_number never emits a comma decimal separator") {
  const std::string s = format_number(3.14159);
  CHECK(s.find(',') == std::string::npos);
  CHECK(s == "3.14159");
}
