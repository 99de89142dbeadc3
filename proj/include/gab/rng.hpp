#pragma once

#include <cstdint>
#include <random>

namespace gab {

/// Seeded PRNG with portable output. mt19937_64 has a pinned bit stream,
/// but std:: distributions do not, so doubles are derived from raw words.
class Rng {
  std::mt19937_64 eng_;

 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0,1).
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a,b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  int sign() { return (next_u64() & 1) ? 1 : -1; }
};

}  // namespace gab
