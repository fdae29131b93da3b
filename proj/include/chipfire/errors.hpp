#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

// Bad input or contract violation: malformed files, unknown vertices,
// disconnected graphs, illegal arguments. CLI exit code 2.
struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (cycle enumeration, probe sets, oracle
// size limits, rational overflow). Never a silent truncation. Exit code 2.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical claim the artifact verifies came out false. Carries a
// serialized counterexample. CLI exit code 1.
struct FalsificationError : std::runtime_error {
  FalsificationError(const std::string& what, std::string counterexample)
      : std::runtime_error(what), counterexample_json(std::move(counterexample)) {}
  std::string counterexample_json;
};

// An internal invariant broke (progress assertion, impossible state).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace chipfire
