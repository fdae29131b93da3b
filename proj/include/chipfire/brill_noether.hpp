#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chipfire/chip_firing.hpp"
#include "chipfire/config.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/io.hpp"

namespace chipfire {

/// Brill-Noether number g - (r+1)(g-d+r). Requires g >= 0, r >= 0.
long long rho(long long g, long long r, long long d);

/// Coefficient 1 on each vertex of the class, 0 elsewhere.
Divisor color_class_divisor(const MultiGraph& g, const std::vector<int>& color_class);

struct CycleHitBound {
  long long min_hits = 0;  // min over cycles of |cycle vertices in b|
  long long r = 0;         // min_hits - 1
  bool rank_determining_certified = false;
  std::optional<int> verified_rank;  // populated when verification is on
};

/// Cycle-hit lower bound on the rank of D_B. Acyclic input is an error; a
/// failed rank-determining certification with r >= 1 aborts loudly as a
/// falsification. With verify on, confirms rank_metric(m, D_B) >= r.
CycleHitBound cycle_hit_lower_bound(const MetricMultigraph& m, const std::vector<int>& b,
                                    long long cycle_cap = kDefaultCycleCap, bool verify = false,
                                    long long probe_cap = kDefaultProbeCap);

/// girth/2 - 1 for bipartite graphs with finite girth; error otherwise.
int bipartite_girth_bound(const MultiGraph& g);

struct FeasiblePair {
  int girth = 0;
  long long genus = 0;
  long long moore_lower_bound = 0;  // 2^(girth/2)
};

/// All (girth, genus) with even girth <= max_girth, genus >= 2^(girth/2)
/// and girth^2/4 > genus. Stabilizes at [(6, 8)] once max_girth >= 6.
std::vector<FeasiblePair> girth_genus_scan(int max_girth);

struct PairWitness {
  int v1 = 0;  // model vertex indices; v1 < v2, both in B
  int v2 = 0;
  Divisor witness;  // D_B - v1 - v2 on the model, v1-reduced
  long long coeff_at_v1 = 0;
  bool v1_reduced = false;
  bool extra_chip_blocked = false;  // D_B - 2*v1 - v2 has no effective equivalent
};

/// Everything needed to re-verify that a metric on the Heawood graph is
/// Brill-Noether special: the divisor, its exact rank with witnesses, rho,
/// and a v1-reduced witness for every unordered pair in B.
struct SpecialnessCertificate {
  MetricMultigraph metric_graph;
  Divisor divisor;  // D_B on the original graph
  long long degree = 0;
  RankResult rank_result;  // on the subdivision model
  long long rho_value = 0;
  int girth_value = 0;
  int genus_value = 0;
  std::vector<PairWitness> pair_witnesses;
  RunConfig config;
  long long trial = 0;
};

/// Runs the whole pipeline on a metric of the Heawood graph. Any embedded
/// check failing raises FalsificationError carrying the metric.
SpecialnessCertificate certify_special(const MetricMultigraph& m, const RunConfig& config,
                                       long long trial = 0);

/// Re-runs every check a certificate embeds; throws on any mismatch.
void revalidate_certificate(const SpecialnessCertificate& cert);

ordered_json certificate_to_json(const SpecialnessCertificate& cert);
std::string certificate_to_text(const SpecialnessCertificate& cert);

}  // namespace chipfire
