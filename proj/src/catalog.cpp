#include "chipfire/catalog.hpp"

#include <algorithm>
#include <set>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

void validate_fano(const IncidenceStructure& inc) {
  if (inc.points.size() != 7 || inc.lines.size() != 7) {
    throw InternalError("Fano plane needs 7 points and 7 lines");
  }
  std::set<std::string> point_set(inc.points.begin(), inc.points.end());
  std::vector<int> lines_through(7, 0);
  for (const auto& [line, pts] : inc.lines) {
    (void)line;
    if (pts.size() != 3) throw InternalError("Fano line without exactly 3 points");
    for (const auto& p : pts) {
      if (!point_set.count(p)) throw InternalError("Fano line uses unknown point");
    }
  }
  for (size_t i = 0; i < inc.points.size(); ++i) {
    int count = 0;
    for (const auto& [line, pts] : inc.lines) {
      (void)line;
      count += std::count(pts.begin(), pts.end(), inc.points[i]);
    }
    if (count != 3) throw InternalError("Fano point not on exactly 3 lines");
  }
  // any two distinct points lie on exactly one common line
  for (size_t i = 0; i < inc.points.size(); ++i) {
    for (size_t j = i + 1; j < inc.points.size(); ++j) {
      int common = 0;
      for (const auto& [line, pts] : inc.lines) {
        (void)line;
        bool a = std::count(pts.begin(), pts.end(), inc.points[i]) > 0;
        bool b = std::count(pts.begin(), pts.end(), inc.points[j]) > 0;
        if (a && b) ++common;
      }
      if (common != 1) throw InternalError("Fano point pair not on exactly one line");
    }
  }
}

}  // namespace

IncidenceStructure fano_plane() {
  IncidenceStructure inc;
  inc.points = {"p1", "p2", "p3", "p4", "p5", "p6", "p7"};
  inc.lines = {
      {"l1", {"p1", "p2", "p3"}}, {"l2", {"p1", "p4", "p5"}}, {"l3", {"p1", "p6", "p7"}},
      {"l4", {"p2", "p4", "p6"}}, {"l5", {"p2", "p5", "p7"}}, {"l6", {"p3", "p4", "p7"}},
      {"l7", {"p3", "p5", "p6"}},
  };
  validate_fano(inc);
  return inc;
}

MultiGraph levi_graph(const IncidenceStructure& inc) {
  std::vector<std::string> vertices = inc.points;
  for (const auto& [line, pts] : inc.lines) {
    (void)pts;
    vertices.push_back(line);
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& [line, pts] : inc.lines) {
    for (const auto& p : pts) {
      edges.emplace_back(p + "-" + line, p, line);
    }
  }
  return MultiGraph(std::move(vertices), edges);
}

MultiGraph heawood() { return levi_graph(fano_plane()); }

MultiGraph loops_on_tree(const MultiGraph& tree, const std::vector<int>& leaves) {
  if (genus(tree) != 0) throw GraphError("loops_on_tree: input has a cycle");
  std::set<int> leaf_set;
  for (int v : leaves) {
    if (v < 0 || v >= tree.vertex_count()) throw GraphError("loops_on_tree: unknown vertex");
    if (tree.degree(v) != 1) {
      throw GraphError("loops_on_tree: '" + tree.vertex_name(v) + "' is not a leaf");
    }
    if (!leaf_set.insert(v).second) throw GraphError("loops_on_tree: duplicate leaf");
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : tree.edges()) {
    edges.emplace_back(e.id, tree.vertex_name(e.u), tree.vertex_name(e.v));
  }
  for (int v : leaves) {
    edges.emplace_back("loop-" + tree.vertex_name(v), tree.vertex_name(v), tree.vertex_name(v));
  }
  return MultiGraph(tree.vertex_names(), edges);
}

MultiGraph looped_star() {
  MultiGraph star({"c", "u1", "u2", "u3"},
                  {{"c-u1", "c", "u1"}, {"c-u2", "c", "u2"}, {"c-u3", "c", "u3"}});
  return loops_on_tree(star, {star.vertex_index("u1"), star.vertex_index("u2"),
                              star.vertex_index("u3")});
}

std::pair<MultiGraph, std::vector<int>> midpoint_subdivision(const MultiGraph& g) {
  std::vector<Rational> twos(g.edge_count(), Rational(2));
  auto sub = subdivide_uniform(MetricMultigraph(g, std::move(twos)));
  return {std::move(sub.graph), std::move(sub.vertex_map)};
}

MultiGraph cycle_graph(int n) {
  if (n < 1) throw GraphError("cycle_graph needs n >= 1");
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back("e" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string(i % n + 1));
  }
  return MultiGraph(std::move(vertices), edges);
}

MultiGraph complete_k4() {
  return MultiGraph({"a", "b", "c", "d"},
                    {{"a-b", "a", "b"},
                     {"a-c", "a", "c"},
                     {"a-d", "a", "d"},
                     {"b-c", "b", "c"},
                     {"b-d", "b", "d"},
                     {"c-d", "c", "d"}});
}

MultiGraph from_catalog(const std::string& name) {
  if (name == "heawood" || name == "fano-levi") return heawood();
  if (name == "figure1") return looped_star();
  if (name == "k4") return complete_k4();
  if (name == "k4-subdivided") return midpoint_subdivision(complete_k4()).first;
  if (name.rfind("cycle:", 0) == 0) {
    const std::string arg = name.substr(6);
    size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(arg, &pos);
    } catch (const std::exception&) {
      throw GraphError("bad cycle size '" + arg + "'");
    }
    if (pos != arg.size()) throw GraphError("bad cycle size '" + arg + "'");
    return cycle_graph(n);
  }
  throw GraphError("unknown catalog graph '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"heawood", "fano-levi", "figure1", "cycle:<n>", "k4", "k4-subdivided"};
}

}  // namespace chipfire
