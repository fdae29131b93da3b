#include "chipfire/rng.hpp"

#include "chipfire/errors.hpp"

namespace chipfire {

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) throw GraphError("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) throw GraphError("uniform: range too wide");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long long>(draw % span);
}

Rational random_length(Rng& rng, long long numerator_bound, long long denominator_bound) {
  if (numerator_bound < 1 || denominator_bound < 1) {
    throw GraphError("random length bounds must be positive");
  }
  long long p = rng.uniform(1, numerator_bound);
  long long q = rng.uniform(1, denominator_bound);
  return Rational(p, q);
}

std::vector<Rational> random_lengths(Rng& rng, int count, long long numerator_bound,
                                     long long denominator_bound) {
  std::vector<Rational> lengths;
  lengths.reserve(count);
  for (int i = 0; i < count; ++i) {
    lengths.push_back(random_length(rng, numerator_bound, denominator_bound));
  }
  return lengths;
}

}  // namespace chipfire
