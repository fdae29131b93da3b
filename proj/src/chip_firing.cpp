#include "chipfire/chip_firing.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

void check_vertex(const MultiGraph& g, int v, const char* what) {
  if (v < 0 || v >= g.vertex_count()) {
    throw GraphError(std::string(what) + ": vertex index out of range");
  }
}

// Burning from q over the current chip vector. A vertex v != q burns once
// the count of burnt incident non-loop edges exceeds chips[v]; loops never
// burn their own vertex. On return, boundary[v] holds, for every unburnt v,
// the number of its edges into the burnt region.
struct BurnState {
  std::vector<char> burnt;
  std::vector<long long> boundary;
  std::vector<int> queue;

  void run(const MultiGraph& g, const std::vector<long long>& chips, int q) {
    const int n = g.vertex_count();
    burnt.assign(n, 0);
    boundary.assign(n, 0);
    queue.clear();
    queue.push_back(q);
    burnt[q] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (auto [w, e] : g.neighbors(u)) {
        (void)e;
        if (burnt[w]) continue;
        if (++boundary[w] > chips[w]) {
          burnt[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  bool all_burnt(int n) const { return static_cast<int>(queue.size()) == n; }
};

std::vector<int> bfs_distances(const MultiGraph& g, int q) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> order;
  order.reserve(g.vertex_count());
  dist[q] = 0;
  order.push_back(q);
  for (size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (auto [w, e] : g.neighbors(u)) {
      (void)e;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Divisor fire_set(const MultiGraph& g, const Divisor& d, const std::vector<int>& s) {
  check_attached(g, d);
  if (s.empty()) throw GraphError("fire_set: empty set");
  std::vector<char> in_s(g.vertex_count(), 0);
  int distinct = 0;
  for (int v : s) {
    check_vertex(g, v, "fire_set");
    if (in_s[v]) throw GraphError("fire_set: duplicate vertex in set");
    in_s[v] = 1;
    ++distinct;
  }
  if (distinct == g.vertex_count()) throw GraphError("fire_set: firing all vertices is a no-op");
  Divisor result = d;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (in_s[e.u] != in_s[e.v]) {
      int from = in_s[e.u] ? e.u : e.v;
      int to = in_s[e.u] ? e.v : e.u;
      result[from] -= 1;
      result[to] += 1;
    }
  }
  return result;
}

std::vector<int> dhar_unburnt(const MultiGraph& g, const Divisor& d, int q) {
  check_attached(g, d);
  check_vertex(g, q, "dhar_unburnt");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v != q && d[v] < 0) {
      throw GraphError("dhar_unburnt: negative coefficient at '" + g.vertex_name(v) +
                       "' outside the base vertex");
    }
  }
  BurnState burn;
  burn.run(g, d.coefficients(), q);
  std::vector<int> unburnt;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!burn.burnt[v]) unburnt.push_back(v);
  }
  return unburnt;
}

Divisor reduce(const MultiGraph& g, const Divisor& d, int q) {
  check_attached(g, d);
  check_vertex(g, q, "reduce");
  const int n = g.vertex_count();
  std::vector<long long> chips = d.coefficients();
  const long long degree_before = d.degree();

  // Phase 1: clear deficits outside q by borrowing along BFS layers,
  // farthest layer first. Firing {dist < i} m times hands every layer-i
  // vertex at least m chips and touches nothing beyond layer i; the layer
  // index is the strictly decreasing potential.
  std::vector<int> dist = bfs_distances(g, q);
  int max_dist = *std::max_element(dist.begin(), dist.end());
  if (max_dist > 0) {
    std::vector<std::vector<int>> layer(max_dist + 1);
    for (int v = 0; v < n; ++v) layer[dist[v]].push_back(v);
    // cross[i]: edges between layers i-1 and i, as (lower, upper)
    std::vector<std::vector<std::pair<int, int>>> cross(max_dist + 1);
    for (const auto& e : g.edges()) {
      if (e.is_loop() || dist[e.u] == dist[e.v]) continue;
      int lo = dist[e.u] < dist[e.v] ? e.u : e.v;
      int hi = lo == e.u ? e.v : e.u;
      cross[dist[hi]].emplace_back(lo, hi);
    }
    for (int i = max_dist; i >= 1; --i) {
      long long deficit = 0;
      for (int v : layer[i]) deficit = std::max(deficit, -chips[v]);
      if (deficit == 0) continue;
      for (auto [lo, hi] : cross[i]) {
        chips[lo] -= deficit;
        chips[hi] += deficit;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (v != q && chips[v] < 0) {
      throw InternalError("reduce: borrowing phase left a deficit");
    }
  }

  // Phase 2: iterate Dhar, firing the unburnt set with the largest legal
  // multiplicity. Every pass is a sequence of legal set-firings, so the
  // remaining firing script shrinks each round and the loop terminates.
  long long positive = 0;
  for (int v = 0; v < n; ++v) {
    if (v != q) positive += chips[v];
  }
  const long long round_guard =
      1000 + 20LL * (n + g.edge_count()) + 20LL * std::max(positive, 0LL) * n;
  BurnState burn;
  long long rounds = 0;
  while (true) {
    burn.run(g, chips, q);
    if (burn.all_burnt(n)) break;
    if (++rounds > round_guard) {
      throw InternalError("reduce: Dhar phase exceeded its progress bound");
    }
    long long t = -1;
    for (int v = 0; v < n; ++v) {
      if (burn.burnt[v] || burn.boundary[v] == 0) continue;
      long long legal = chips[v] / burn.boundary[v];
      if (t < 0 || legal < t) t = legal;
    }
    if (t < 1) throw InternalError("reduce: illegal Dhar firing multiplicity");
    for (int v = 0; v < n; ++v) {
      if (burn.burnt[v]) continue;
      for (auto [w, e] : g.neighbors(v)) {
        (void)e;
        if (burn.burnt[w]) {
          chips[v] -= t;
          chips[w] += t;
        }
      }
    }
  }

  Divisor result(n);
  long long degree_after = 0;
  for (int v = 0; v < n; ++v) {
    result[v] = chips[v];
    degree_after += chips[v];
  }
  if (degree_after != degree_before) throw InternalError("reduce: degree not conserved");
  return result;
}

bool is_reduced(const MultiGraph& g, const Divisor& d, int q) {
  check_attached(g, d);
  check_vertex(g, q, "is_reduced");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v != q && d[v] < 0) return false;
  }
  BurnState burn;
  burn.run(g, d.coefficients(), q);
  return burn.all_burnt(g.vertex_count());
}

bool is_equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2) {
  check_attached(g, d1);
  check_attached(g, d2);
  if (d1.degree() != d2.degree()) return false;
  return reduce(g, d1, 0) == reduce(g, d2, 0);
}

std::optional<Divisor> effective_in_class(const MultiGraph& g, const Divisor& d) {
  check_attached(g, d);
  Divisor r = reduce(g, d, 0);
  if (r[0] < 0) return std::nullopt;
  return r;
}

Divisor canonical_divisor(const MultiGraph& g) {
  Divisor k(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 2;
  return k;
}

namespace {

// Loopless model: each loop becomes two parallel edges through a fresh
// midpoint vertex; everything else is untouched.
MultiGraph loop_split(const MultiGraph& g) {
  std::vector<Rational> lengths;
  lengths.reserve(g.edge_count());
  for (const auto& e : g.edges()) lengths.push_back(Rational(e.is_loop() ? 2 : 1));
  return subdivide_uniform(MetricMultigraph(g, std::move(lengths))).graph;
}

// Saturating count of multisets of size r from p elements; cap+1 on overflow.
long long multiset_count(long long p, long long r, long long cap) {
  long long count = 1;
  for (long long i = 1; i <= r; ++i) {
    __int128 next = static_cast<__int128>(count) * (p + i - 1);
    next /= i;
    if (next > cap) return cap + 1;
    count = static_cast<long long>(next);
  }
  return count;
}

bool next_multiset(std::vector<int>& sel, int pool_size) {
  for (int i = static_cast<int>(sel.size()) - 1; i >= 0; --i) {
    if (sel[i] < pool_size - 1) {
      int v = sel[i] + 1;
      for (size_t j = i; j < sel.size(); ++j) sel[j] = v;
      return true;
    }
  }
  return false;
}

RankResult rank_by_probes(const std::shared_ptr<const MultiGraph>& graph, const Divisor& d,
                          const RankOptions& opts, const std::vector<int>& pool) {
  const MultiGraph& g = *graph;
  RankResult result;
  result.witness_graph = graph;
  const long long deg = d.degree();

  if (deg < 0) {
    result.rank = -1;
    result.upper_witness = UpperWitness{Divisor::zero(g), reduce(g, d, 0), 0};
    return result;
  }

  auto probe_at = [&](const std::vector<int>& sel) {
    Divisor probe(g.vertex_count());
    for (int idx : sel) probe[pool[idx]] += 1;
    return probe;
  };

  for (long long r = 0;; ++r) {
    if (r > deg + 1) throw InternalError("rank probing ran past the degree bound");
    long long count = multiset_count(static_cast<long long>(pool.size()), r, opts.probe_cap);
    if (count > opts.probe_cap) {
      throw ResourceError("rank probe cap exceeded at degree " + std::to_string(r) + " (" +
                          std::to_string(opts.probe_cap) + ")");
    }
    std::vector<int> sel(static_cast<size_t>(r), 0);
    bool more = true;
    while (more) {
      Divisor probe = probe_at(sel);
      Divisor remainder = d - probe;
      auto effective = effective_in_class(g, remainder);
      if (!effective) {
        result.rank = static_cast<int>(r) - 1;
        result.upper_witness = UpperWitness{std::move(probe), reduce(g, remainder, 0), 0};
        // collect the witnesses of the last fully passing level
        if (r >= 1) {
          std::vector<int> wsel(static_cast<size_t>(r - 1), 0);
          bool wmore = true;
          while (wmore) {
            Divisor wprobe = probe_at(wsel);
            auto weff = effective_in_class(g, d - wprobe);
            if (!weff) throw InternalError("rank witness re-enumeration disagreed");
            result.lower_witnesses.push_back(LowerWitness{std::move(wprobe), std::move(*weff)});
            wmore = wsel.empty() ? false : next_multiset(wsel, static_cast<int>(pool.size()));
          }
        }
        return result;
      }
      more = sel.empty() ? false : next_multiset(sel, static_cast<int>(pool.size()));
    }
  }
}

}  // namespace

RankResult rank_discrete(const MultiGraph& g, const Divisor& d, const RankOptions& opts,
                         const std::optional<std::vector<int>>& probe_set) {
  check_attached(g, d);
  std::shared_ptr<const MultiGraph> model;
  Divisor work;
  if (g.has_loops()) {
    model = std::make_shared<MultiGraph>(loop_split(g));
    work = Divisor(model->vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) work[v] = d[v];
  } else {
    model = std::make_shared<MultiGraph>(g);
    work = d;
  }

  std::vector<int> pool;
  if (probe_set) {
    pool = *probe_set;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (int v : pool) check_vertex(*model, v, "rank probe set");
    if (pool.empty()) throw GraphError("rank probe set is empty");
  } else {
    pool.resize(model->vertex_count());
    for (int v = 0; v < model->vertex_count(); ++v) pool[v] = v;
  }

  const long long deg = work.degree();
  const long long canonical_degree = 2LL * genus(*model) - 2;
  if (opts.rr_shortcut && deg > canonical_degree) {
    long long shortcut = deg - genus(*model);
    if (opts.verify) {
      RankResult full = rank_by_probes(model, work, opts, pool);
      if (full.rank != shortcut) {
        throw FalsificationError(
            "Riemann-Roch shortcut mismatch: probes say " + std::to_string(full.rank) +
                ", shortcut says " + std::to_string(shortcut),
            "{\"degree\":" + std::to_string(deg) + "}");
      }
      return full;
    }
    RankResult result;
    result.rank = static_cast<int>(shortcut);
    result.witness_graph = model;
    return result;
  }
  return rank_by_probes(model, work, opts, pool);
}

Model subdivision_model(const MetricMultigraph& m) {
  auto [scaled, factor] = rescale_to_integer_lengths(m);
  bool doubled = false;
  for (int e = 0; e < scaled.graph.edge_count(); ++e) {
    if (scaled.graph.edge(e).is_loop() && scaled.lengths[e].num() == 1) {
      doubled = true;
      break;
    }
  }
  if (doubled) {
    std::vector<Rational> twice;
    twice.reserve(scaled.lengths.size());
    for (const auto& len : scaled.lengths) twice.push_back(len * Rational(2));
    scaled = MetricMultigraph(scaled.graph, std::move(twice));
    factor = factor * Rational(2);
  }
  auto sub = subdivide_uniform(scaled);
  Model model;
  model.graph = std::make_shared<MultiGraph>(std::move(sub.graph));
  model.scale = factor;
  model.doubled = doubled;
  return model;
}

RankResult rank_metric(const MetricMultigraph& m, const Divisor& d,
                       const std::optional<std::vector<int>>& probe_set,
                       const RankOptions& opts) {
  check_attached(m.graph, d);
  if (probe_set && !certify_rank_determining(m, *probe_set)) {
    throw GraphError("rank_metric: probe set is not certified rank-determining");
  }
  Model model = subdivision_model(m);
  Divisor lifted(model.graph->vertex_count());
  for (int v = 0; v < m.graph.vertex_count(); ++v) lifted[v] = d[v];
  return rank_discrete(*model.graph, lifted, opts, probe_set);
}

bool certify_rank_determining(const MetricMultigraph& m, const std::vector<int>& a) {
  for (int v : a) check_vertex(m.graph, v, "certify_rank_determining");
  Model model = subdivision_model(m);
  const MultiGraph& g = *model.graph;
  if (g.has_loops()) throw InternalError("subdivision model has loops");

  std::vector<char> in_a(g.vertex_count(), 0);
  for (int v : a) in_a[v] = 1;

  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<char> edge_seen(g.edge_count(), 0);
  std::vector<char> attach_seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (in_a[s] || visited[s]) continue;
    // closure of this component: its vertices, attachment vertices in a,
    // and every edge with at least one endpoint inside. Acyclic iff the
    // (connected) closure has exactly |V| - 1 edges.
    std::vector<int> component{s};
    std::vector<int> attachments;
    std::vector<int> closure_edges;
    visited[s] = 1;
    for (size_t head = 0; head < component.size(); ++head) {
      int u = component[head];
      for (auto [w, e] : g.neighbors(u)) {
        if (!edge_seen[e]) {
          edge_seen[e] = 1;
          closure_edges.push_back(e);
        }
        if (in_a[w]) {
          if (!attach_seen[w]) {
            attach_seen[w] = 1;
            attachments.push_back(w);
          }
        } else if (!visited[w]) {
          visited[w] = 1;
          component.push_back(w);
        }
      }
    }
    size_t closure_vertices = component.size() + attachments.size();
    bool acyclic = closure_edges.size() == closure_vertices - 1;
    for (int e : closure_edges) edge_seen[e] = 0;
    for (int v : attachments) attach_seen[v] = 0;
    if (!acyclic) return false;
  }
  return true;
}

}  // namespace chipfire
