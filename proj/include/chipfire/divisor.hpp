#pragma once

#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

/// Integer chip assignment on the vertices of a fixed graph, stored densely
/// in vertex order.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(int vertex_count) : coeffs_(vertex_count, 0) {}

  static Divisor zero(const MultiGraph& g) { return Divisor(g.vertex_count()); }
  static Divisor single(const MultiGraph& g, int v, long long amount = 1);

  long long& operator[](int v) { return coeffs_[v]; }
  long long operator[](int v) const { return coeffs_[v]; }

  int size() const { return static_cast<int>(coeffs_.size()); }
  long long degree() const;
  bool is_effective() const;

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  bool operator==(const Divisor& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Divisor& o) const { return !(*this == o); }

  const std::vector<long long>& coefficients() const { return coeffs_; }

 private:
  std::vector<long long> coeffs_;
};

/// Throws GraphError unless d is attached to (sized for) g.
void check_attached(const MultiGraph& g, const Divisor& d);

}  // namespace chipfire
