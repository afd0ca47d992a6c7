#pragma once

#include <cstdint>

#include "wdeg/rational.hpp"

namespace wdeg {

/// Deterministic 64-bit generator (splitmix64). All randomness in the library
/// flows through this type so that runs are reproducible from a seed.
///
/// Bit-exact update rule:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in {-10..10} minus {0}: draw next() mod 21 - 10, redraw on 0.
  long nonzero_small_int() {
    for (;;) {
      long v = static_cast<long>(next() % 21) - 10;
      if (v != 0) return v;
    }
  }

  /// Uniform in {1..bound}: next() mod bound + 1.
  long positive_int(long bound) { return static_cast<long>(next() % static_cast<std::uint64_t>(bound)) + 1; }

  Rational nonzero_small_rational() { return Rational(nonzero_small_int()); }

 private:
  std::uint64_t state_;
};

}  // namespace wdeg
