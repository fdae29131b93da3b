#include "chipfire/divisor.hpp"

#include <numeric>

#include "chipfire/errors.hpp"

namespace chipfire {

Divisor Divisor::single(const MultiGraph& g, int v, long long amount) {
  Divisor d(g.vertex_count());
  if (v < 0 || v >= g.vertex_count()) throw GraphError("divisor vertex out of range");
  d[v] = amount;
  return d;
}

long long Divisor::degree() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0LL);
}

bool Divisor::is_effective() const {
  for (long long c : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
  if (coeffs_.size() != o.coeffs_.size()) throw GraphError("divisor size mismatch");
  Divisor r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  if (coeffs_.size() != o.coeffs_.size()) throw GraphError("divisor size mismatch");
  Divisor r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

void check_attached(const MultiGraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) {
    throw GraphError("divisor is not attached to this graph (size mismatch)");
  }
}

}  // namespace chipfire
