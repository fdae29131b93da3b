#include "chipfire/brill_noether.hpp"

#include <algorithm>
#include <sstream>

#include "chipfire/catalog.hpp"
#include "chipfire/errors.hpp"

namespace chipfire {

long long rho(long long g, long long r, long long d) {
  if (g < 0 || r < 0) throw GraphError("rho requires g >= 0 and r >= 0");
  return g - (r + 1) * (g - d + r);
}

Divisor color_class_divisor(const MultiGraph& g, const std::vector<int>& color_class) {
  Divisor d(g.vertex_count());
  for (int v : color_class) {
    if (v < 0 || v >= g.vertex_count()) throw GraphError("color class has an unknown vertex");
    if (d[v] != 0) throw GraphError("color class lists a vertex twice");
    d[v] = 1;
  }
  return d;
}

CycleHitBound cycle_hit_lower_bound(const MetricMultigraph& m, const std::vector<int>& b,
                                    long long cycle_cap, bool verify, long long probe_cap) {
  auto hits = min_cycle_hits(m.graph, b, cycle_cap);
  if (!hits) {
    throw GraphError("cycle_hit_lower_bound: graph is acyclic, the bound is void");
  }
  CycleHitBound result;
  result.min_hits = *hits;
  result.r = *hits - 1;
  if (result.r >= 1) {
    result.rank_determining_certified = certify_rank_determining(m, b);
    if (!result.rank_determining_certified) {
      throw FalsificationError(
          "cycle-hit hypothesis holds but the set failed the rank-determining certification",
          graph_to_json(m).dump());
    }
  }
  if (verify) {
    RankOptions opts;
    opts.probe_cap = probe_cap;
    std::optional<std::vector<int>> probes;
    if (result.rank_determining_certified) probes = b;
    RankResult rank = rank_metric(m, color_class_divisor(m.graph, b), probes, opts);
    result.verified_rank = rank.rank;
    if (rank.rank < result.r) {
      throw FalsificationError("rank_metric(D_B) fell below the cycle-hit bound",
                               graph_to_json(m).dump());
    }
  }
  return result;
}

int bipartite_girth_bound(const MultiGraph& g) {
  if (!bipartition(g)) throw GraphError("bipartite_girth_bound requires a bipartite graph");
  auto girth_value = girth(g);
  if (!girth_value) throw GraphError("bipartite_girth_bound requires a graph with a cycle");
  if (*girth_value % 2 != 0) throw InternalError("bipartite graph with odd girth");
  return *girth_value / 2 - 1;
}

std::vector<FeasiblePair> girth_genus_scan(int max_girth) {
  if (max_girth < 2 || max_girth % 2 != 0) {
    throw GraphError("girth_genus_scan needs an even bound >= 2");
  }
  std::vector<FeasiblePair> pairs;
  for (int girth = 2; girth <= max_girth; girth += 2) {
    int half = girth / 2;
    if (half > 62) break;  // 2^half dwarfs girth^2/4 long before this
    long long moore = 1LL << half;
    long long genus_limit = static_cast<long long>(girth) * girth / 4;  // need genus < limit
    for (long long genus = moore; genus < genus_limit; ++genus) {
      pairs.push_back(FeasiblePair{girth, genus, moore});
    }
  }
  return pairs;
}

namespace {

[[noreturn]] void falsified(const std::string& what, const MetricMultigraph& m) {
  throw FalsificationError(what, graph_to_json(m).dump());
}

void check_is_heawood(const MetricMultigraph& m) {
  MultiGraph reference = heawood();
  const MultiGraph& g = m.graph;
  bool same = g.vertex_names() == reference.vertex_names() &&
              g.edge_count() == reference.edge_count();
  if (same) {
    for (int e = 0; e < g.edge_count(); ++e) {
      const EdgeRef& a = g.edge(e);
      const EdgeRef& b = reference.edge(e);
      if (a.id != b.id || a.u != b.u || a.v != b.v) {
        same = false;
        break;
      }
    }
  }
  if (!same) {
    throw GraphError("certify_special expects the catalog Heawood graph");
  }
}

}  // namespace

SpecialnessCertificate certify_special(const MetricMultigraph& m, const RunConfig& config,
                                       long long trial) {
  check_is_heawood(m);

  SpecialnessCertificate cert{m, Divisor(), 0, RankResult(), 0, 0, 0, {}, config, trial};
  cert.genus_value = genus(m.graph);
  if (cert.genus_value != 8) falsified("Heawood genus is not 8", m);
  auto girth_value = girth(m.graph);
  if (!girth_value || *girth_value != 6) falsified("Heawood girth is not 6", m);
  cert.girth_value = *girth_value;

  auto classes = bipartition(m.graph);
  if (!classes || classes->black.size() != 7 || classes->white.size() != 7) {
    falsified("Heawood bipartition is not 7 + 7", m);
  }
  const std::vector<int>& b = classes->black;

  cert.divisor = color_class_divisor(m.graph, b);
  cert.degree = cert.divisor.degree();
  if (cert.degree != 7) falsified("D_B does not have degree 7", m);

  if (!certify_rank_determining(m, b)) {
    falsified("color class failed the rank-determining certification", m);
  }

  RankOptions opts;
  opts.probe_cap = config.probe_cap;
  cert.rank_result = rank_metric(m, cert.divisor, b, opts);
  if (cert.rank_result.rank != 2) {
    falsified("rank of D_B is " + std::to_string(cert.rank_result.rank) + ", not 2", m);
  }

  cert.rho_value = rho(cert.genus_value, cert.rank_result.rank, cert.degree);
  if (cert.rho_value != -1) falsified("rho(8, 2, 7) did not come out as -1", m);

  // One v1-reduced witness per unordered pair in B: D_B - v1 - v2 stays put
  // under reduction at v1, and adding the extra chip at v1 pins a negative
  // coefficient there, so no effective divisor is equivalent.
  const Model model = subdivision_model(m);
  const MultiGraph& mg = *model.graph;
  Divisor lifted(mg.vertex_count());
  for (int v = 0; v < m.graph.vertex_count(); ++v) lifted[v] = cert.divisor[v];
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) {
      PairWitness w;
      w.v1 = b[i];
      w.v2 = b[j];
      w.witness = lifted;
      w.witness[w.v1] -= 1;
      w.witness[w.v2] -= 1;
      w.coeff_at_v1 = w.witness[w.v1];
      w.v1_reduced = is_reduced(mg, w.witness, w.v1);
      Divisor extra = w.witness;
      extra[w.v1] -= 1;
      w.extra_chip_blocked = is_reduced(mg, extra, w.v1) && extra[w.v1] < 0;
      if (!w.v1_reduced || w.coeff_at_v1 != 0 || !w.extra_chip_blocked) {
        falsified("pair witness failed at (" + mg.vertex_name(w.v1) + ", " +
                      mg.vertex_name(w.v2) + ")",
                  m);
      }
      cert.pair_witnesses.push_back(std::move(w));
    }
  }
  if (cert.pair_witnesses.size() != 21) falsified("expected 21 pair witnesses", m);

  if (config.verify) revalidate_certificate(cert);
  return cert;
}

void revalidate_certificate(const SpecialnessCertificate& cert) {
  const MetricMultigraph& m = cert.metric_graph;
  check_is_heawood(m);
  if (genus(m.graph) != cert.genus_value) falsified("genus mismatch on revalidation", m);
  auto girth_value = girth(m.graph);
  if (!girth_value || *girth_value != cert.girth_value) {
    falsified("girth mismatch on revalidation", m);
  }
  if (cert.divisor.degree() != cert.degree) falsified("degree mismatch on revalidation", m);
  if (rho(cert.genus_value, cert.rank_result.rank, cert.degree) != cert.rho_value) {
    falsified("rho mismatch on revalidation", m);
  }

  const MultiGraph& mg = *cert.rank_result.witness_graph;
  Divisor lifted(mg.vertex_count());
  for (int v = 0; v < m.graph.vertex_count(); ++v) lifted[v] = cert.divisor[v];

  for (const auto& w : cert.rank_result.lower_witnesses) {
    if (!w.effective_equivalent.is_effective() ||
        !is_equivalent(mg, lifted - w.probe, w.effective_equivalent)) {
      falsified("a lower rank witness failed to re-verify", m);
    }
  }
  if (!cert.rank_result.upper_witness) falsified("certificate lacks an upper witness", m);
  const UpperWitness& up = *cert.rank_result.upper_witness;
  if (up.probe.degree() != cert.rank_result.rank + 1 ||
      up.reduced_form[up.base_vertex] >= 0 ||
      !is_reduced(mg, up.reduced_form, up.base_vertex) ||
      !is_equivalent(mg, lifted - up.probe, up.reduced_form)) {
    falsified("the upper rank witness failed to re-verify", m);
  }

  for (const auto& w : cert.pair_witnesses) {
    Divisor expect = lifted;
    expect[w.v1] -= 1;
    expect[w.v2] -= 1;
    if (expect != w.witness || !is_reduced(mg, w.witness, w.v1) || w.witness[w.v1] != 0) {
      falsified("a pair witness failed to re-verify", m);
    }
    Divisor extra = w.witness;
    extra[w.v1] -= 1;
    if (!is_reduced(mg, extra, w.v1) || extra[w.v1] >= 0) {
      falsified("a pair witness exactness check failed to re-verify", m);
    }
  }
}

ordered_json certificate_to_json(const SpecialnessCertificate& cert) {
  const MultiGraph& mg = *cert.rank_result.witness_graph;
  ordered_json j;
  j["graph"] = graph_to_json(cert.metric_graph);
  ordered_json metric = ordered_json::object();
  for (int e = 0; e < cert.metric_graph.graph.edge_count(); ++e) {
    metric[cert.metric_graph.graph.edge(e).id] = cert.metric_graph.lengths[e].str();
  }
  j["metric"] = std::move(metric);
  j["divisor"] = divisor_to_json(cert.metric_graph.graph, cert.divisor);
  j["degree"] = cert.degree;
  j["rank_result"] = rank_result_to_json(cert.rank_result);
  j["rho_value"] = cert.rho_value;
  j["girth"] = cert.girth_value;
  j["genus"] = cert.genus_value;
  j["reduced_witnesses"] = ordered_json::array();
  for (const auto& w : cert.pair_witnesses) {
    ordered_json jw;
    jw["v1"] = mg.vertex_name(w.v1);
    jw["v2"] = mg.vertex_name(w.v2);
    jw["divisor"] = divisor_to_json(mg, w.witness);
    jw["coefficient_at_v1"] = w.coeff_at_v1;
    jw["v1_reduced"] = w.v1_reduced;
    jw["extra_chip_blocked"] = w.extra_chip_blocked;
    j["reduced_witnesses"].push_back(std::move(jw));
  }
  ordered_json config;
  config["seed"] = cert.config.seed;
  config["trial"] = cert.trial;
  config["trials"] = cert.config.trials;
  config["numerator_bound"] = cert.config.numerator_bound;
  config["denominator_bound"] = cert.config.denominator_bound;
  config["cycle_cap"] = cert.config.cycle_cap;
  config["probe_cap"] = cert.config.probe_cap;
  config["verify"] = cert.config.verify;
  j["config"] = std::move(config);
  return j;
}

std::string certificate_to_text(const SpecialnessCertificate& cert) {
  std::ostringstream out;
  const MetricMultigraph& m = cert.metric_graph;
  out << "Brill-Noether specialness certificate\n";
  out << "graph: " << m.graph.vertex_count() << " vertices, " << m.graph.edge_count()
      << " edges; genus " << cert.genus_value << ", girth " << cert.girth_value << "\n";
  out << "metric:";
  bool unit = true;
  for (const auto& len : m.lengths) unit = unit && len == Rational(1);
  if (unit) {
    out << " all edge lengths 1\n";
  } else {
    out << "\n";
    for (int e = 0; e < m.graph.edge_count(); ++e) {
      out << "  " << m.graph.edge(e).id << " = " << m.lengths[e].str() << "\n";
    }
  }
  out << "divisor: D_B = sum of one color class, degree " << cert.degree << "\n";
  out << "rank: " << cert.rank_result.rank << " (" << cert.rank_result.lower_witnesses.size()
      << " passing probes at degree " << cert.rank_result.rank;
  if (cert.rank_result.upper_witness) {
    const MultiGraph& mg = *cert.rank_result.witness_graph;
    out << "; failing probe " << divisor_to_json(mg, cert.rank_result.upper_witness->probe).dump();
  }
  out << ")\n";
  out << "rho(" << cert.genus_value << ", " << cert.rank_result.rank << ", " << cert.degree
      << ") = " << cert.rho_value << "  =>  Brill-Noether special\n";
  out << "pair witnesses: " << cert.pair_witnesses.size()
      << "/21 v1-reduced with coefficient 0 at v1\n";
  out << "seed " << cert.config.seed << ", trial " << cert.trial << "\n";
  return out.str();
}

}  // namespace chipfire
