#pragma once

#include <cstdint>

namespace overbern {

/// SplitMix64 (Steele, Lea & Flood; the sequence is fixed by the three
/// published constants, so any language reproduces it from the same seed).
/// All randomized corpus members and experiment trials draw from this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1), 53 mantissa bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1,1).
  double next_symmetric() { return 2.0 * next_double() - 1.0; }

  /// Uniform in [lo,hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  std::uint64_t state_;
};

}  // namespace overbern
