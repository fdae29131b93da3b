#include <doctest.h>

#include <algorithm>
#include <set>

#include "chipfire/brill_noether.hpp"
#include "chipfire/catalog.hpp"
#include "chipfire/chip_firing.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/rng.hpp"
#include "generators.hpp"

using namespace chipfire;

TEST_CASE("fano plane axioms") {
  IncidenceStructure inc = fano_plane();
  REQUIRE(inc.points.size() == 7);
  REQUIRE(inc.lines.size() == 7);

  // p1 and p2 lie on exactly one common line, l1
  std::vector<std::string> common;
  for (const auto& [line, pts] : inc.lines) {
    bool a = std::count(pts.begin(), pts.end(), "p1") > 0;
    bool b = std::count(pts.begin(), pts.end(), "p2") > 0;
    if (a && b) common.push_back(line);
  }
  CHECK(common == std::vector<std::string>{"l1"});

  for (const auto& p : inc.points) {
    int on = 0;
    for (const auto& [line, pts] : inc.lines) {
      (void)line;
      on += std::count(pts.begin(), pts.end(), p) > 0;
    }
    CHECK(on == 3);
  }

  // any two distinct lines meet in exactly one point
  for (size_t i = 0; i < inc.lines.size(); ++i) {
    for (size_t j = i + 1; j < inc.lines.size(); ++j) {
      std::set<std::string> a(inc.lines[i].second.begin(), inc.lines[i].second.end());
      int meet = 0;
      for (const auto& p : inc.lines[j].second) meet += a.count(p) > 0;
      CHECK(meet == 1);
    }
  }
}

TEST_CASE("levi graph of the fano plane") {
  MultiGraph g = levi_graph(fano_plane());
  CHECK(g.vertex_count() == 14);
  CHECK(g.edge_count() == 21);
  CHECK(girth(g) == 6);
  CHECK(genus(g) == 8);
  CHECK(g.is_trivalent());

  IncidenceStructure tiny{{"p"}, {{"l", {"p"}}}};
  MultiGraph one = levi_graph(tiny);
  CHECK(one.vertex_count() == 2);
  CHECK(one.edge_count() == 1);
}

TEST_CASE("heawood graph invariants") {
  MultiGraph g = heawood();
  CHECK(g.vertex_count() == 14);
  CHECK(g.edge_count() == 21);
  CHECK(g.is_trivalent());
  CHECK(genus(g) == 8);
  CHECK(girth(g) == 6);
  CHECK(edge_connectivity(g) == 3);
  CHECK(g.vertex_count() == 2 * ((1 << 3) - 1));  // breadth-first-search bound, met exactly

  auto classes = bipartition(g);
  REQUIRE(classes.has_value());
  for (int v : classes->black) CHECK(g.vertex_name(v)[0] == 'p');
  for (int v : classes->white) CHECK(g.vertex_name(v)[0] == 'l');
}

TEST_CASE("loops on a tree") {
  {
    MultiGraph fig = looped_star();
    CHECK(fig.vertex_count() == 4);
    CHECK(fig.edge_count() == 6);
    CHECK(genus(fig) == 3);
    CHECK(fig.is_trivalent());
    CHECK(girth(fig) == 1);
  }
  {
    MultiGraph path({"u", "v"}, {{"e", "u", "v"}});
    MultiGraph g = loops_on_tree(path, {0, 1});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(genus(g) == 2);
  }
  {
    MultiGraph solo({"a"}, {});
    MultiGraph g = loops_on_tree(solo, {});
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }
  {
    CHECK_THROWS_AS(loops_on_tree(cycle_graph(3), {0}), GraphError);
    MultiGraph path3({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "b", "c"}});
    CHECK_THROWS_AS(loops_on_tree(path3, {1}), GraphError);  // b is not a leaf
  }
}

TEST_CASE("loops_on_tree genus equals loop count") {
  Rng rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    MultiGraph tree = testgen::random_multigraph(rng, 2, 7, 0, false);
    std::vector<int> leaves;
    for (int v = 0; v < tree.vertex_count(); ++v) {
      if (tree.degree(v) == 1) leaves.push_back(v);
    }
    MultiGraph g = loops_on_tree(tree, leaves);
    CHECK(genus(g) == static_cast<int>(leaves.size()));
    if (!leaves.empty()) CHECK(girth(g) == 1);
  }
}

TEST_CASE("midpoint subdivision") {
  {
    auto [g, originals] = midpoint_subdivision(complete_k4());
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 12);
    CHECK(genus(g) == 3);
    auto classes = bipartition(g);
    REQUIRE(classes.has_value());
    CHECK(classes->black == originals);
    CHECK(girth(g) == 2 * *girth(complete_k4()));
    // D_B on the original vertices is the canonical divisor of G'
    CHECK(color_class_divisor(g, originals) == canonical_divisor(g));
  }
  {
    MultiGraph edge({"a", "b"}, {{"e", "a", "b"}});
    auto [g, originals] = midpoint_subdivision(edge);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(originals.size() == 2);
  }
}

TEST_CASE("midpoint subdivision is bipartite and doubles the girth") {
  for (const auto* name : {"heawood", "cycle:5", "cycle:2", "figure1", "k4"}) {
    MultiGraph g = from_catalog(name);
    auto [sub, originals] = midpoint_subdivision(g);
    auto classes = bipartition(sub);
    REQUIRE(classes.has_value());
    CHECK(classes->black == originals);
    auto base_girth = girth(g);
    REQUIRE(base_girth.has_value());
    CHECK(girth(sub) == 2 * *base_girth);
  }
}

TEST_CASE("cycle graphs") {
  MultiGraph c6 = cycle_graph(6);
  CHECK(bipartition(c6).has_value());
  CHECK(girth(c6) == 6);
  CHECK(genus(c6) == 1);
  CHECK(girth(cycle_graph(1)) == 1);
  CHECK(girth(cycle_graph(2)) == 2);
  CHECK_THROWS_AS(cycle_graph(0), GraphError);
}

TEST_CASE("catalog lookup") {
  CHECK(from_catalog("heawood").vertex_count() == 14);
  CHECK(from_catalog("fano-levi").vertex_count() == 14);
  CHECK(from_catalog("figure1").edge_count() == 6);
  CHECK(from_catalog("cycle:6").vertex_count() == 6);
  CHECK(from_catalog("k4").edge_count() == 6);
  CHECK(from_catalog("k4-subdivided").vertex_count() == 10);
  CHECK_THROWS_AS(from_catalog("petersen"), GraphError);
  CHECK_THROWS_AS(from_catalog("cycle:x"), GraphError);
  CHECK_THROWS_AS(from_catalog("cycle:0"), GraphError);
}
