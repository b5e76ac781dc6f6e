#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "multispace/quadrature.hpp"

using multispace::adaptive_simpson;

TEST_CASE("adaptive_simpson reproduces closed-form integrals") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 3.0) ==
        doctest::Approx(9.0).epsilon(1e-10));
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 1.0) ==
        doctest::Approx(std::numbers::e - 1.0).epsilon(1e-10));
  // A sharp peak forces genuine adaptivity.
  const double peak = adaptive_simpson(
      [](double x) { return 1.0 / (1e-4 + (x - 0.5) * (x - 0.5)); }, 0.0, 1.0, 1e-10);
  const double exact = 2.0 / 1e-2 * std::atan(0.5 / 1e-2);
  CHECK(peak == doctest::Approx(exact).epsilon(1e-8));
}

TEST_CASE("adaptive_simpson degenerate and reversed ranges") {
  CHECK(adaptive_simpson([](double x) { return x; }, 2.0, 2.0) == 0.0);
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return x; }, 3.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("adaptive_simpson rejects non-finite integrands") {
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return 1.0 / x; }, -1.0, 1.0, 1e-12),
                  std::runtime_error);
}

TEST_CASE("adaptive_simpson reports budget exhaustion instead of looping") {
  // ~160000 oscillations across the range cannot be resolved to 1e-14 within
  // 64 subdivisions, so the budget must run out and be reported.
  auto oscillator = [](double x) { return std::sin(1e6 * x * x) + 2.0; };
  CHECK_THROWS_AS(adaptive_simpson(oscillator, 0.0, 1.0, 1e-14, 64),
                  std::runtime_error);
}
