#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

inline constexpr long long kDefaultProbeCap = 2'000'000;

/// One chip moves across every non-loop edge leaving s. Requires a nonempty
/// proper subset of the vertices; loops and internal edges have no effect.
Divisor fire_set(const MultiGraph& g, const Divisor& d, const std::vector<int>& s);

/// Dhar's burning algorithm from q: the maximal set (excluding q) left
/// unburnt, empty iff d is q-reduced. Requires d nonnegative outside q.
std::vector<int> dhar_unburnt(const MultiGraph& g, const Divisor& d, int q);

/// The unique q-reduced divisor linearly equivalent to d.
Divisor reduce(const MultiGraph& g, const Divisor& d, int q);

bool is_reduced(const MultiGraph& g, const Divisor& d, int q);

/// Linear equivalence via uniqueness of reduced divisors at the first vertex.
bool is_equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2);

/// An effective divisor equivalent to d if one exists.
std::optional<Divisor> effective_in_class(const MultiGraph& g, const Divisor& d);

/// deg(v) - 2 at every vertex (loops count 2); total degree 2*genus - 2.
Divisor canonical_divisor(const MultiGraph& g);

struct RankOptions {
  long long probe_cap = kDefaultProbeCap;  // max probes per rank level
  bool rr_shortcut = false;                // opt-in: deg > 2g-2 => rank = deg - g
  bool verify = false;                     // cross-check the shortcut with full probes
};

struct LowerWitness {
  Divisor probe;                 // effective, degree = rank
  Divisor effective_equivalent;  // effective divisor shown equivalent to d - probe
};

struct UpperWitness {
  Divisor probe;         // effective, degree = rank + 1
  Divisor reduced_form;  // reduced form of d - probe, negative at base_vertex
  int base_vertex = 0;
};

/// Baker-Norine rank with machine-checkable witnesses. Witness divisors live
/// on witness_graph (the input graph, or its loop-split model when the input
/// has loops).
struct RankResult {
  int rank = -1;
  std::vector<LowerWitness> lower_witnesses;
  std::optional<UpperWitness> upper_witness;  // absent only under rr_shortcut
  std::shared_ptr<const MultiGraph> witness_graph;
};

/// Rank over vertex-supported probes, ascending r, lexicographic probe order.
/// probe_set (when given) restricts lower-bound probes; it must index
/// witness-graph vertices.
RankResult rank_discrete(const MultiGraph& g, const Divisor& d, const RankOptions& opts = {},
                         const std::optional<std::vector<int>>& probe_set = std::nullopt);

/// Unit-edge subdivision model of a metric graph, loop-free by construction.
struct Model {
  std::shared_ptr<const MultiGraph> graph;
  Rational scale;         // factor applied to the input lengths
  bool doubled = false;   // lengths were doubled to clear unit loops
};

Model subdivision_model(const MetricMultigraph& m);

/// Rank of a divisor supported on the original vertices of a metric graph,
/// computed on the subdivision model. probe_set (original vertex indices)
/// must pass certify_rank_determining.
RankResult rank_metric(const MetricMultigraph& m, const Divisor& d,
                       const std::optional<std::vector<int>>& probe_set = std::nullopt,
                       const RankOptions& opts = {});

/// Sufficient criterion: true iff the closure of every connected component
/// of the metric graph minus a is acyclic. True implies a is
/// rank-determining.
bool certify_rank_determining(const MetricMultigraph& m, const std::vector<int>& a);

}  // namespace chipfire
