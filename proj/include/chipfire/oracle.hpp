#pragma once

#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire::oracle {

/// Integer Laplacian of a multigraph together with an exact lattice
/// membership test for its image. Loops contribute nothing; row sums are
/// zero and the rank is |V| - 1. Shares no code with the burning-algorithm
/// path.
class LaplacianLattice {
 public:
  explicit LaplacianLattice(const MultiGraph& g);

  /// True iff vec lies in the image of L over the integers.
  bool contains(const std::vector<long long>& vec) const;

  const std::vector<std::vector<long long>>& matrix() const { return lap_; }

 private:
  std::vector<std::vector<long long>> lap_;
};

/// d1 ~ d2 iff d1 - d2 is an integer combination of Laplacian columns.
bool equivalent_via_lattice(const MultiGraph& g, const Divisor& d1, const Divisor& d2);

/// Definitional Baker-Norine rank by exhaustive enumeration over
/// vertex-supported effective divisors, decided with the lattice test.
/// Hard caps: |V| <= 8 and degree <= 8 on the (loop-split) model.
int rank_bruteforce(const MultiGraph& g, const Divisor& d);

}  // namespace chipfire::oracle
