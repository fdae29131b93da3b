#pragma once

#include <cstdint>

#include "chipfire/chip_firing.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

/// Knobs shared by the CLI and the certification pipeline; recorded verbatim
/// into every emitted certificate.
struct RunConfig {
  std::uint64_t seed = 42;
  long long trials = 1;
  long long numerator_bound = 10;
  long long denominator_bound = 6;
  long long cycle_cap = kDefaultCycleCap;
  long long probe_cap = kDefaultProbeCap;
  bool verify = false;
};

}  // namespace chipfire
