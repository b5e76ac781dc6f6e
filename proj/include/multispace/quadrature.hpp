#pragma once

#include <cstddef>
#include <functional>

namespace multispace {

// Adaptive Simpson integration of f over [lo, hi] to a relative tolerance.
//
// The interval is split recursively; each subinterval is accepted when the
// Richardson error estimate (S_half - S_whole)/15 fits within its share of the
// absolute budget rel_tol * |initial estimate|. Throws std::invalid_argument
// when lo > hi or rel_tol <= 0, and std::runtime_error when the subdivision
// cap is exhausted before convergence. Deterministic: fixed traversal order,
// no randomness.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol = 1e-8,
                        std::size_t max_subdivisions = std::size_t{1} << 20);

}  // namespace multispace
