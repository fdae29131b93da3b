#include "chipfire/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "chipfire/errors.hpp"

namespace chipfire {

MultiGraph::MultiGraph(std::vector<std::string> vertex_names,
                       const std::vector<std::tuple<std::string, std::string, std::string>>& edge_list)
    : names_(std::move(vertex_names)) {
  if (names_.empty()) throw GraphError("graph needs at least one vertex");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) throw GraphError("empty vertex name");
    if (!index_.emplace(names_[i], i).second) {
      throw GraphError("duplicate vertex name '" + names_[i] + "'");
    }
  }
  adj_.resize(names_.size());
  loops_.assign(names_.size(), 0);

  std::set<std::string> edge_ids;
  edges_.reserve(edge_list.size());
  for (const auto& [id, a, b] : edge_list) {
    if (id.empty()) throw GraphError("empty edge id");
    if (!edge_ids.insert(id).second) throw GraphError("duplicate edge id '" + id + "'");
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end()) throw GraphError("edge '" + id + "' uses unknown endpoint '" + a + "'");
    if (ib == index_.end()) throw GraphError("edge '" + id + "' uses unknown endpoint '" + b + "'");
    int e = static_cast<int>(edges_.size());
    edges_.push_back({id, ia->second, ib->second});
    if (ia->second == ib->second) {
      loops_[ia->second] += 1;
      total_loops_ += 1;
    } else {
      adj_[ia->second].emplace_back(ib->second, e);
      adj_[ib->second].emplace_back(ia->second, e);
    }
  }

  // connectivity (loops are irrelevant to it)
  std::vector<char> seen(names_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, e] : adj_[u]) {
      (void)e;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != vertex_count()) throw GraphError("graph is not connected");
}

int MultiGraph::vertex_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw GraphError("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

std::optional<int> MultiGraph::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MultiGraph::is_trivalent() const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (degree(v) != 3) return false;
  }
  return true;
}

MetricMultigraph::MetricMultigraph(MultiGraph g, std::vector<Rational> edge_lengths)
    : graph(std::move(g)), lengths(std::move(edge_lengths)) {
  if (static_cast<int>(lengths.size()) != graph.edge_count()) {
    throw GraphError("length count does not match edge count");
  }
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (!lengths[i].is_positive()) {
      throw GraphError("edge '" + graph.edge(static_cast<int>(i)).id + "' has non-positive length");
    }
  }
}

MetricMultigraph MetricMultigraph::unit(MultiGraph g) {
  std::vector<Rational> ones(g.edge_count(), Rational(1));
  return MetricMultigraph(std::move(g), std::move(ones));
}

bool MetricMultigraph::integer_lengths() const {
  return std::all_of(lengths.begin(), lengths.end(),
                     [](const Rational& r) { return r.is_integer(); });
}

int genus(const MultiGraph& g) { return g.edge_count() - g.vertex_count() + 1; }

std::optional<int> girth(const MultiGraph& g) {
  if (g.has_loops()) return 1;
  // parallel pair?
  std::set<std::pair<int, int>> seen_pairs;
  for (const auto& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    if (!seen_pairs.insert(key).second) return 2;
  }
  // simple graph: BFS from every vertex, min over closed edges
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent_edge(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [w, e] : g.neighbors(u)) {
        if (e == parent_edge[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = e;
          q.push(w);
        } else {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<Bipartition> bipartition(const MultiGraph& g) {
  if (g.has_loops()) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  color[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, e] : g.neighbors(u)) {
      (void)e;
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        q.push(w);
      } else if (color[w] == color[u]) {
        return std::nullopt;
      }
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) {
    (color[v] == 0 ? b.black : b.white).push_back(v);
  }
  return b;
}

namespace {

bool connected_without(const MultiGraph& g, const std::vector<int>& removed_edges) {
  std::vector<char> removed(g.edge_count(), 0);
  for (int e : removed_edges) removed[e] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, e] : g.neighbors(u)) {
      if (removed[e] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      q.push(w);
    }
  }
  return reached == g.vertex_count();
}

bool any_subset_disconnects(const MultiGraph& g, const std::vector<int>& candidates, int k,
                            size_t from, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == k) return !connected_without(g, chosen);
  for (size_t i = from; i < candidates.size(); ++i) {
    chosen.push_back(candidates[i]);
    if (any_subset_disconnects(g, candidates, k, i + 1, chosen)) {
      chosen.pop_back();
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

int edge_connectivity(const MultiGraph& g) {
  if (g.vertex_count() < 2) throw GraphError("edge connectivity undefined on a single vertex");
  // loops never separate anything
  std::vector<int> candidates;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).is_loop()) candidates.push_back(e);
  }
  int min_degree = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    min_degree = std::min(min_degree, static_cast<int>(g.neighbors(v).size()));
  }
  for (int k = 1; k <= min_degree; ++k) {
    std::vector<int> chosen;
    if (any_subset_disconnects(g, candidates, k, 0, chosen)) return k;
  }
  return min_degree;
}

namespace {

struct CycleSearch {
  const MultiGraph& g;
  long long cap;
  std::vector<Cycle>& out;
  std::vector<char> on_path;
  std::vector<char> edge_used;
  std::vector<int> path_vertices;
  std::vector<int> path_edges;
  int start = 0;

  CycleSearch(const MultiGraph& graph, long long cycle_cap, std::vector<Cycle>& sink)
      : g(graph), cap(cycle_cap), out(sink) {
    on_path.assign(g.vertex_count(), 0);
    edge_used.assign(g.edge_count(), 0);
  }

  void emit(int closing_edge) {
    if (static_cast<long long>(out.size()) >= cap) {
      throw ResourceError("cycle enumeration cap exceeded (" + std::to_string(cap) + ")");
    }
    Cycle c;
    c.vertices = path_vertices;
    c.vertices.push_back(start);
    c.edges = path_edges;
    c.edges.push_back(closing_edge);
    out.push_back(std::move(c));
  }

  void dfs(int u) {
    for (auto [w, e] : g.neighbors(u)) {
      if (edge_used[e]) continue;
      if (w == start) {
        if (!path_edges.empty() && path_edges.front() < e) emit(e);
        // single-edge closures (u == start with an empty path) are not cycles
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = 1;
      edge_used[e] = 1;
      path_vertices.push_back(w);
      path_edges.push_back(e);
      dfs(w);
      path_edges.pop_back();
      path_vertices.pop_back();
      edge_used[e] = 0;
      on_path[w] = 0;
    }
  }

  void run() {
    for (int s = 0; s < g.vertex_count(); ++s) {
      start = s;
      path_vertices.assign(1, s);
      path_edges.clear();
      on_path[s] = 1;
      dfs(s);
      on_path[s] = 0;
    }
  }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const MultiGraph& g, long long cap) {
  if (cap < 1) throw GraphError("cycle cap must be positive");
  std::vector<Cycle> cycles;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) {
      if (static_cast<long long>(cycles.size()) >= cap) {
        throw ResourceError("cycle enumeration cap exceeded (" + std::to_string(cap) + ")");
      }
      int v = g.edge(e).u;
      cycles.push_back(Cycle{{v, v}, {e}});
    }
  }
  CycleSearch search(g, cap, cycles);
  search.run();
  return cycles;
}

std::optional<long long> min_cycle_hits(const MultiGraph& g, const std::vector<int>& b,
                                        long long cap) {
  std::vector<char> in_b(g.vertex_count(), 0);
  for (int v : b) {
    if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex set contains an unknown vertex");
    in_b[v] = 1;
  }
  auto cycles = enumerate_cycles(g, cap);
  if (cycles.empty()) return std::nullopt;
  long long best = -1;
  for (const auto& c : cycles) {
    long long hits = 0;
    for (size_t i = 0; i + 1 < c.vertices.size(); ++i) {
      if (in_b[c.vertices[i]]) ++hits;
    }
    if (best < 0 || hits < best) best = hits;
  }
  return best;
}

std::pair<MetricMultigraph, Rational> rescale_to_integer_lengths(const MetricMultigraph& m) {
  long long denominator_lcm = 1;
  for (const auto& len : m.lengths) {
    denominator_lcm = checked_lcm(denominator_lcm, len.den());
  }
  std::vector<long long> ints;
  ints.reserve(m.lengths.size());
  long long g = 0;
  for (const auto& len : m.lengths) {
    Rational scaled = len * Rational(denominator_lcm);
    if (!scaled.is_integer()) throw InternalError("rescale produced a non-integer");
    ints.push_back(scaled.num());
    g = std::gcd(g, scaled.num());
  }
  if (g == 0) g = 1;  // edgeless graphs
  Rational factor = Rational(denominator_lcm, g);
  std::vector<Rational> lengths;
  lengths.reserve(ints.size());
  for (long long v : ints) lengths.push_back(Rational(v / g));
  return {MetricMultigraph(m.graph, std::move(lengths)), factor};
}

SubdivisionResult subdivide_uniform(const MetricMultigraph& m) {
  if (!m.integer_lengths()) throw GraphError("subdivision requires integer edge lengths");
  const MultiGraph& g = m.graph;
  std::vector<std::string> vertices = g.vertex_names();
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeRef& edge = g.edge(e);
    long long len = m.lengths[e].num();
    std::string prev = g.vertex_name(edge.u);
    for (long long k = 1; k < len; ++k) {
      std::string mid = edge.id + ":" + std::to_string(k);
      vertices.push_back(mid);
      edges.emplace_back(edge.id + ":" + std::to_string(k - 1), prev, mid);
      prev = mid;
    }
    std::string last_id = len == 1 ? edge.id : edge.id + ":" + std::to_string(len - 1);
    edges.emplace_back(last_id, prev, g.vertex_name(edge.v));
  }
  SubdivisionResult result{MultiGraph(std::move(vertices), edges), {}};
  result.vertex_map.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) result.vertex_map[v] = v;
  return result;
}

}  // namespace chipfire
