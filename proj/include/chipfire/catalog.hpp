#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

/// Point-line incidence structure. fano_plane() validates the projective
/// axioms of the order-2 instance at construction.
struct IncidenceStructure {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::vector<std::string>>> lines;
};

IncidenceStructure fano_plane();

/// Bipartite incidence graph: point vertices, line vertices, one edge per
/// incidence (id "<point>-<line>").
MultiGraph levi_graph(const IncidenceStructure& inc);

/// levi_graph(fano_plane()) with vertices p1..p7, l1..l7.
MultiGraph heawood();

/// Attach one loop to each listed leaf of a tree. Rejects non-tree input and
/// vertices that are not leaves.
MultiGraph loops_on_tree(const MultiGraph& tree, const std::vector<int>& leaves);

/// The trivalent 4-vertex graph made of a 3-star with a loop on each leaf.
MultiGraph looped_star();

/// Insert a vertex in the middle of every edge. Returns the bipartite graph
/// and the original vertex indices (one color class).
std::pair<MultiGraph, std::vector<int>> midpoint_subdivision(const MultiGraph& g);

/// n-cycle as a multigraph: n = 1 is a loop, n = 2 a parallel pair.
MultiGraph cycle_graph(int n);

MultiGraph complete_k4();

/// CLI catalog names: heawood, fano-levi, figure1, cycle:<n>, k4,
/// k4-subdivided.
MultiGraph from_catalog(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace chipfire
