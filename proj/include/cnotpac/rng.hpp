#pragma once

#include <cstdint>
#include <random>

namespace cnotpac {

// Only raw 64-bit outputs are used. The std distributions are implementation
// defined, which would break cross-platform reproducibility of seeded runs.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if ((bound & (bound - 1)) == 0) return rng() & (bound - 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace cnotpac
