#pragma once

// Seeded random fixtures shared by the property tests and the acceptance
// suite. Everything here is deterministic in the seed.

#include <string>
#include <tuple>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/rng.hpp"

namespace chipfire::testgen {

inline std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

// Random connected multigraph: a random tree plus extra edges. Extra edges
// may duplicate endpoints (parallel) and, when allowed, form loops.
inline MultiGraph random_multigraph(Rng& rng, int min_v, int max_v, int max_extra,
                                    bool allow_loops) {
  int n = static_cast<int>(rng.uniform(min_v, max_v));
  auto names = vertex_names(n);
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  int next_edge = 1;
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng.uniform(0, i - 1));
    edges.emplace_back("e" + std::to_string(next_edge++), names[parent], names[i]);
  }
  int extras = static_cast<int>(rng.uniform(0, max_extra));
  for (int k = 0; k < extras; ++k) {
    int a = static_cast<int>(rng.uniform(0, n - 1));
    int b = static_cast<int>(rng.uniform(0, n - 1));
    if (a == b && !allow_loops) {
      if (n == 1) continue;
      b = (a + 1) % n;
    }
    edges.emplace_back("e" + std::to_string(next_edge++), names[a], names[b]);
  }
  return MultiGraph(names, edges);
}

inline Divisor random_divisor(Rng& rng, const MultiGraph& g, long long lo, long long hi) {
  Divisor d(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d[v] = rng.uniform(lo, hi);
  return d;
}

// Divisor with coefficients in [-2, 2] and |degree| <= bound.
inline Divisor bounded_divisor(Rng& rng, const MultiGraph& g, long long degree_bound) {
  while (true) {
    Divisor d = random_divisor(rng, g, -2, 2);
    long long deg = d.degree();
    if (deg >= -degree_bound && deg <= degree_bound) return d;
  }
}

// Random simple connected bipartite graph: color classes of sizes 2..5,
// random bipartite spanning tree, plus `extra` non-duplicate cross edges.
// Simpleness keeps the girth at 4 or above.
struct BipartiteSample {
  MultiGraph graph;
  std::vector<int> black;
  std::vector<int> white;
};

inline BipartiteSample random_bipartite_simple(Rng& rng, int min_extra, int max_extra) {
  int nb = static_cast<int>(rng.uniform(2, 5));
  int nw = static_cast<int>(rng.uniform(2, 5));
  std::vector<std::string> names;
  for (int i = 1; i <= nb; ++i) names.push_back("b" + std::to_string(i));
  for (int i = 1; i <= nw; ++i) names.push_back("w" + std::to_string(i));

  std::vector<char> placed(nb + nw, 0);
  std::vector<int> placed_black{0}, placed_white{nb};
  placed[0] = placed[nb] = 1;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::vector<std::vector<char>> used(nb, std::vector<char>(nw, 0));
  int next_edge = 1;
  auto connect = [&](int b, int w) {
    edges.emplace_back("e" + std::to_string(next_edge++), names[b], names[nb + w]);
    used[b][w] = 1;
  };
  connect(0, 0);
  std::vector<int> rest;
  for (int v = 1; v < nb; ++v) rest.push_back(v);
  for (int v = nb + 1; v < nb + nw; ++v) rest.push_back(v);
  // deterministic shuffle
  for (int i = static_cast<int>(rest.size()) - 1; i > 0; --i) {
    int j = static_cast<int>(rng.uniform(0, i));
    std::swap(rest[i], rest[j]);
  }
  for (int v : rest) {
    if (v < nb) {
      int w = placed_white[rng.uniform(0, static_cast<long long>(placed_white.size()) - 1)] - nb;
      connect(v, w);
      placed_black.push_back(v);
    } else {
      int b = placed_black[rng.uniform(0, static_cast<long long>(placed_black.size()) - 1)];
      connect(b, v - nb);
      placed_white.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int b = 0; b < nb; ++b) {
    for (int w = 0; w < nw; ++w) {
      if (!used[b][w]) free_pairs.emplace_back(b, w);
    }
  }
  int extra = static_cast<int>(rng.uniform(min_extra, max_extra));
  for (int k = 0; k < extra && !free_pairs.empty(); ++k) {
    size_t pick = static_cast<size_t>(rng.uniform(0, static_cast<long long>(free_pairs.size()) - 1));
    connect(free_pairs[pick].first, free_pairs[pick].second);
    free_pairs.erase(free_pairs.begin() + static_cast<long>(pick));
  }

  MultiGraph g(names, edges);
  BipartiteSample sample{std::move(g), {}, {}};
  for (int v = 0; v < nb; ++v) sample.black.push_back(v);
  for (int v = nb; v < nb + nw; ++v) sample.white.push_back(v);
  return sample;
}

}  // namespace chipfire::testgen
