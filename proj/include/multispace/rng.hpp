#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace multispace {

// Deterministic draws over std::mt19937_64. The standard <random>
// distributions have implementation-defined algorithms, so seeded validators
// and tests use these fixed mappings instead; results are identical on every
// conforming platform.

// Uniform double in [lo, hi).
inline double uniform_real(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * u;
}

// Uniform index in [0, n). Requires n >= 1. The modulo bias is below 2^-53
// for every n used here and the mapping is fully portable.
inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
  return static_cast<std::size_t>(gen() % static_cast<std::uint64_t>(n));
}

// Uniform integer in [lo, hi] inclusive. Requires lo <= hi.
inline long uniform_int(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(uniform_index(gen, static_cast<std::size_t>(hi - lo + 1)));
}

}  // namespace multispace
