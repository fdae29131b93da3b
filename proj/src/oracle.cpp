#include "chipfire/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "chipfire/errors.hpp"

namespace chipfire::oracle {

namespace {

// Integer row echelon via repeated Euclidean row operations. Returns the
// rank; rows and rhs are transformed in place. Solutions of A x = rhs are
// unchanged by the row operations.
int echelonize(std::vector<std::vector<long long>>& a, std::vector<long long>& rhs) {
  const int n = static_cast<int>(a.size());
  const int cols = n == 0 ? 0 : static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < n; ++col) {
    while (true) {
      int pivot = -1;
      for (int r = row; r < n; ++r) {
        if (a[r][col] != 0 && (pivot < 0 || std::llabs(a[r][col]) < std::llabs(a[pivot][col]))) {
          pivot = r;
        }
      }
      if (pivot < 0) break;
      bool others = false;
      for (int r = row; r < n; ++r) {
        if (r == pivot || a[r][col] == 0) continue;
        long long q = a[r][col] / a[pivot][col];
        for (int c = 0; c < cols; ++c) a[r][c] -= q * a[pivot][c];
        rhs[r] -= q * rhs[pivot];
        others |= a[r][col] != 0;
      }
      if (!others) {
        std::swap(a[pivot], a[row]);
        std::swap(rhs[pivot], rhs[row]);
        ++row;
        break;
      }
    }
  }
  return row;
}

bool solvable(std::vector<std::vector<long long>> a, std::vector<long long> rhs) {
  const int n = static_cast<int>(a.size());
  const int rank = echelonize(a, rhs);
  for (int r = rank; r < n; ++r) {
    if (rhs[r] != 0) return false;
  }
  std::vector<long long> x(n, 0);
  for (int r = rank - 1; r >= 0; --r) {
    int lead = 0;
    while (lead < n && a[r][lead] == 0) ++lead;
    if (lead == n) throw InternalError("lattice echelon lost a pivot");
    __int128 acc = rhs[r];
    for (int c = lead + 1; c < n; ++c) acc -= static_cast<__int128>(a[r][c]) * x[c];
    if (acc % a[r][lead] != 0) return false;
    __int128 value = acc / a[r][lead];
    if (value > INT64_MAX || value < INT64_MIN) {
      throw ResourceError("lattice solution overflow");
    }
    x[lead] = static_cast<long long>(value);
  }
  return true;
}

bool next_effective(std::vector<int>& sel, int n) {
  for (int i = static_cast<int>(sel.size()) - 1; i >= 0; --i) {
    if (sel[i] < n - 1) {
      int v = sel[i] + 1;
      for (size_t j = i; j < sel.size(); ++j) sel[j] = v;
      return true;
    }
  }
  return false;
}

MultiGraph split_loops(const MultiGraph& g) {
  std::vector<Rational> lengths;
  lengths.reserve(g.edge_count());
  for (const auto& e : g.edges()) lengths.push_back(Rational(e.is_loop() ? 2 : 1));
  return subdivide_uniform(MetricMultigraph(g, std::move(lengths))).graph;
}

}  // namespace

LaplacianLattice::LaplacianLattice(const MultiGraph& g) {
  const int n = g.vertex_count();
  lap_.assign(n, std::vector<long long>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    lap_[e.u][e.u] += 1;
    lap_[e.v][e.v] += 1;
    lap_[e.u][e.v] -= 1;
    lap_[e.v][e.u] -= 1;
  }
  for (int r = 0; r < n; ++r) {
    long long sum = std::accumulate(lap_[r].begin(), lap_[r].end(), 0LL);
    if (sum != 0) throw InternalError("Laplacian row sum nonzero");
    for (int c = 0; c < n; ++c) {
      if (lap_[r][c] != lap_[c][r]) throw InternalError("Laplacian not symmetric");
    }
  }
  auto copy = lap_;
  std::vector<long long> zero(n, 0);
  if (echelonize(copy, zero) != n - 1) {
    throw InternalError("Laplacian rank is not |V| - 1");
  }
}

bool LaplacianLattice::contains(const std::vector<long long>& vec) const {
  if (vec.size() != lap_.size()) throw GraphError("lattice vector size mismatch");
  if (std::accumulate(vec.begin(), vec.end(), 0LL) != 0) return false;
  return solvable(lap_, vec);
}

bool equivalent_via_lattice(const MultiGraph& g, const Divisor& d1, const Divisor& d2) {
  check_attached(g, d1);
  check_attached(g, d2);
  if (d1.degree() != d2.degree()) return false;
  std::vector<long long> diff(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) diff[v] = d1[v] - d2[v];
  return LaplacianLattice(g).contains(diff);
}

int rank_bruteforce(const MultiGraph& g, const Divisor& d) {
  check_attached(g, d);
  MultiGraph model = g.has_loops() ? split_loops(g) : g;
  Divisor work(model.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) work[v] = d[v];

  const int n = model.vertex_count();
  const long long deg = work.degree();
  if (n > 8) {
    throw ResourceError("oracle cap exceeded: model has " + std::to_string(n) + " > 8 vertices");
  }
  if (deg > 8) {
    throw ResourceError("oracle cap exceeded: degree " + std::to_string(deg) + " > 8");
  }
  if (deg < 0) return -1;

  LaplacianLattice lattice(model);
  auto equivalent = [&](const Divisor& a, const Divisor& b) {
    if (a.degree() != b.degree()) return false;
    std::vector<long long> diff(n);
    for (int v = 0; v < n; ++v) diff[v] = a[v] - b[v];
    return lattice.contains(diff);
  };

  // some effective F of the given degree is equivalent to `target`?
  auto has_effective = [&](const Divisor& target, long long fdeg) {
    if (fdeg < 0) return false;
    std::vector<int> sel(static_cast<size_t>(fdeg), 0);
    while (true) {
      Divisor f(n);
      for (int idx : sel) f[idx] += 1;
      if (equivalent(target, f)) return true;
      if (sel.empty() || !next_effective(sel, n)) return false;
    }
  };

  for (long long r = 0;; ++r) {
    std::vector<int> sel(static_cast<size_t>(r), 0);
    while (true) {
      Divisor probe(n);
      for (int idx : sel) probe[idx] += 1;
      if (!has_effective(work - probe, deg - r)) return static_cast<int>(r) - 1;
      if (sel.empty() || !next_effective(sel, n)) break;
    }
  }
}

}  // namespace chipfire::oracle
