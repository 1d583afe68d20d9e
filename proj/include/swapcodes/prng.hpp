#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace swapcodes {

// All randomized routines draw from mt19937_64 seeded explicitly; the
// generator's output sequence is fixed by the standard, so a given seed
// produces the same results on every platform.

// Uniform draw from {0, ..., bound-1} by rejection (bound >= 1).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw < limit) return draw % bound;
  }
}

}  // namespace swapcodes
