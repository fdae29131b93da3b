#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chipfire/rational.hpp"

namespace chipfire {

/// Deterministic generator: mt19937_64 plus rejection sampling, so sequences
/// are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive.
  long long uniform(long long lo, long long hi);

  bool chance(long long numerator, long long denominator) {
    return uniform(1, denominator) <= numerator;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform over {p/q : 1 <= p <= numerator_bound, 1 <= q <= denominator_bound}.
Rational random_length(Rng& rng, long long numerator_bound, long long denominator_bound);

std::vector<Rational> random_lengths(Rng& rng, int count, long long numerator_bound,
                                     long long denominator_bound);

}  // namespace chipfire
