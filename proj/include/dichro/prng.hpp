#pragma once

#include <cstdint>
#include <random>

namespace dichro {

// All randomized code draws from std::mt19937 (MT19937, fixed by the C++
// standard) through the two helpers below, never through std:: distributions,
// whose output is implementation-defined. This keeps seeded fixtures stable
// across toolchains.

/// Uniform integer in [0, k) by rejection sampling; k must be positive.
inline std::uint32_t bounded_uniform(std::mt19937& rng, std::uint32_t k) {
  const std::uint32_t limit = k * (UINT32_MAX / k);
  std::uint32_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % k;
}

/// Uniform real in [0, 1) with 32 bits of precision.
inline double unit_real(std::mt19937& rng) {
  return rng() * (1.0 / 4294967296.0);
}

}  // namespace dichro
