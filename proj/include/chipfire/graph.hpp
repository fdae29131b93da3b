#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chipfire/rational.hpp"

namespace chipfire {

inline constexpr long long kDefaultCycleCap = 1'000'000;

struct EdgeRef {
  std::string id;
  int u = 0;  // endpoint indices into the vertex list; u == v marks a loop
  int v = 0;
  bool is_loop() const { return u == v; }
};

/// Connected undirected multigraph: loops and parallel edges allowed,
/// vertices and edges kept in declaration order. Immutable after
/// construction; construction validates connectivity and id uniqueness.
class MultiGraph {
 public:
  /// Edges as (id, endpoint name, endpoint name).
  MultiGraph(std::vector<std::string> vertex_names,
             const std::vector<std::tuple<std::string, std::string, std::string>>& edge_list);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<EdgeRef>& edges() const { return edges_; }
  const EdgeRef& edge(int e) const { return edges_[e]; }

  int vertex_index(std::string_view name) const;  // throws GraphError if unknown
  std::optional<int> find_vertex(std::string_view name) const;

  /// Non-loop incidences of v as (neighbor, edge index), in edge order.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
  int loop_count(int v) const { return loops_[v]; }
  /// Loops count 2.
  int degree(int v) const { return static_cast<int>(adj_[v].size()) + 2 * loops_[v]; }

  bool has_loops() const { return total_loops_ > 0; }
  bool is_trivalent() const;

 private:
  std::vector<std::string> names_;
  std::vector<EdgeRef> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> loops_;
  std::unordered_map<std::string, int> index_;
  int total_loops_ = 0;
};

/// A multigraph with strictly positive rational edge lengths (by edge index).
struct MetricMultigraph {
  MultiGraph graph;
  std::vector<Rational> lengths;

  MetricMultigraph(MultiGraph g, std::vector<Rational> edge_lengths);
  static MetricMultigraph unit(MultiGraph g);

  bool integer_lengths() const;
};

struct Bipartition {
  std::vector<int> black;  // class containing the first vertex
  std::vector<int> white;
};

/// Closed walk with no repeated vertex or edge. vertices.front() ==
/// vertices.back(); a loop edge alone has length 1, a parallel pair length 2.
struct Cycle {
  std::vector<int> vertices;  // length() + 1 entries, closed
  std::vector<int> edges;     // edge indices
  int length() const { return static_cast<int>(edges.size()); }
};

/// First Betti number |E| - |V| + 1 (graph is connected by construction).
int genus(const MultiGraph& g);

/// Minimum cycle length; nullopt for acyclic graphs. Loops give 1,
/// parallel edges give 2.
std::optional<int> girth(const MultiGraph& g);

/// Proper 2-coloring when one exists, with the first vertex black.
std::optional<Bipartition> bipartition(const MultiGraph& g);

/// Minimum number of edges whose removal disconnects g. Requires |V| >= 2.
int edge_connectivity(const MultiGraph& g);

/// Every simple cycle exactly once up to rotation/reflection. Exceeding the
/// cap raises ResourceError, never a silent truncation.
std::vector<Cycle> enumerate_cycles(const MultiGraph& g, long long cap = kDefaultCycleCap);

/// min over all cycles of |cycle vertices ∩ b|; nullopt for acyclic g.
std::optional<long long> min_cycle_hits(const MultiGraph& g, const std::vector<int>& b,
                                        long long cap = kDefaultCycleCap);

/// Canonical minimal scaling onto positive integer lengths. Returns the
/// scaled graph and the factor every length was multiplied by.
std::pair<MetricMultigraph, Rational> rescale_to_integer_lengths(const MetricMultigraph& m);

struct SubdivisionResult {
  MultiGraph graph;             // original vertices first, same names
  std::vector<int> vertex_map;  // original index -> index in graph (identity prefix)
};

/// Replace each edge of integer length l by a path of l unit edges through
/// l-1 fresh vertices named "<edge id>:k". Requires integer lengths.
SubdivisionResult subdivide_uniform(const MetricMultigraph& m);

}  // namespace chipfire
