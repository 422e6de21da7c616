#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace osbop {

/// Every randomized component draws from a caller-owned mt19937_64 stream.
/// The helpers below consume raw engine output, so a given seed produces the
/// same results on every platform and standard library. Parallel multi-seed
/// runs stay reproducible by giving each run its own engine, seeded with that
/// run's seed.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

/// Uniform integer in [0, k), k >= 1. Unbiased (rejection sampling). A forced
/// choice (k == 1) consumes no engine output.
inline std::size_t uniform_index(Rng& rng, std::size_t k) {
  if (k <= 1) return 0;
  const auto bound = static_cast<std::uint64_t>(k);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % bound);
}

/// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform_real01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_real01(rng);
}

}  // namespace osbop
