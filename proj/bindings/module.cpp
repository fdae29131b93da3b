#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chipfire/brill_noether.hpp"
#include "chipfire/catalog.hpp"
#include "chipfire/chip_firing.hpp"
#include "chipfire/config.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/io.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/rng.hpp"

namespace py = pybind11;
using namespace chipfire;

namespace {

Divisor divisor_from_map(const MultiGraph& g, const std::map<std::string, long long>& coeffs) {
  Divisor d(g.vertex_count());
  for (const auto& [name, value] : coeffs) d[g.vertex_index(name)] = value;
  return d;
}

std::map<std::string, long long> divisor_to_map(const MultiGraph& g, const Divisor& d) {
  std::map<std::string, long long> coeffs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d[v] != 0) coeffs[g.vertex_name(v)] = d[v];
  }
  return coeffs;
}

struct PyGraph {
  MetricMultigraph metric;

  explicit PyGraph(MetricMultigraph m) : metric(std::move(m)) {}

  std::vector<std::string> vertices() const { return metric.graph.vertex_names(); }
  int vertex_count() const { return metric.graph.vertex_count(); }
  int edge_count() const { return metric.graph.edge_count(); }
  int genus_() const { return genus(metric.graph); }
  std::optional<int> girth_() const { return girth(metric.graph); }
  bool trivalent() const { return metric.graph.is_trivalent(); }
  int connectivity() const { return edge_connectivity(metric.graph); }

  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> classes() const {
    auto b = bipartition(metric.graph);
    if (!b) return std::nullopt;
    std::pair<std::vector<std::string>, std::vector<std::string>> out;
    for (int v : b->black) out.first.push_back(metric.graph.vertex_name(v));
    for (int v : b->white) out.second.push_back(metric.graph.vertex_name(v));
    return out;
  }

  std::map<std::string, long long> canonical() const {
    return divisor_to_map(metric.graph, canonical_divisor(metric.graph));
  }

  PyGraph with_lengths(const std::map<std::string, std::string>& lengths) const {
    std::vector<Rational> parsed = metric.lengths;
    for (const auto& [id, text] : lengths) {
      int found = -1;
      for (int e = 0; e < metric.graph.edge_count(); ++e) {
        if (metric.graph.edge(e).id == id) {
          found = e;
          break;
        }
      }
      if (found < 0) throw GraphError("unknown edge '" + id + "'");
      parsed[found] = Rational::parse(text);
    }
    return PyGraph(MetricMultigraph(metric.graph, std::move(parsed)));
  }

  std::string to_json() const { return graph_to_json(metric).dump(2) + "\n"; }
  std::string dot() const { return to_dot(metric); }
};

std::optional<std::vector<int>> resolve_probes(const PyGraph& g, const std::string& mode) {
  if (mode == "off") return std::nullopt;
  if (mode != "auto") throw GraphError("probe_set must be 'auto' or 'off'");
  auto classes = bipartition(g.metric.graph);
  if (!classes) return std::nullopt;
  if (certify_rank_determining(g.metric, classes->black)) return classes->black;
  if (certify_rank_determining(g.metric, classes->white)) return classes->white;
  return std::nullopt;
}

std::string rank_json(const PyGraph& g, const std::map<std::string, long long>& coeffs,
                      const std::string& probe_set, long long probe_cap) {
  RankOptions opts;
  opts.probe_cap = probe_cap;
  Divisor d = divisor_from_map(g.metric.graph, coeffs);
  RankResult r = rank_metric(g.metric, d, resolve_probes(g, probe_set), opts);
  return rank_result_to_json(r).dump();
}

int rank_oracle(const PyGraph& g, const std::map<std::string, long long>& coeffs) {
  Model model = subdivision_model(g.metric);
  Divisor d = divisor_from_map(g.metric.graph, coeffs);
  Divisor lifted(model.graph->vertex_count());
  for (int v = 0; v < g.metric.graph.vertex_count(); ++v) lifted[v] = d[v];
  return oracle::rank_bruteforce(*model.graph, lifted);
}

std::map<std::string, long long> reduce_metric(const PyGraph& g,
                                               const std::map<std::string, long long>& coeffs,
                                               const std::string& base) {
  Model model = subdivision_model(g.metric);
  Divisor d(model.graph->vertex_count());
  for (const auto& [name, value] : coeffs) d[model.graph->vertex_index(name)] = value;
  Divisor reduced = reduce(*model.graph, d, model.graph->vertex_index(base));
  return divisor_to_map(*model.graph, reduced);
}

std::string certify_heawood_json(std::uint64_t seed, long long trials,
                                 long long numerator_bound, long long denominator_bound,
                                 bool unit_lengths, bool verify) {
  MultiGraph hw = heawood();
  RunConfig config;
  config.seed = seed;
  config.trials = trials;
  config.numerator_bound = numerator_bound;
  config.denominator_bound = denominator_bound;
  config.verify = verify;
  Rng rng(seed);
  ordered_json out = ordered_json::array();
  for (long long trial = 0; trial < trials; ++trial) {
    std::vector<Rational> lengths =
        unit_lengths ? std::vector<Rational>(hw.edge_count(), Rational(1))
                     : random_lengths(rng, hw.edge_count(), numerator_bound, denominator_bound);
    SpecialnessCertificate cert = certify_special(MetricMultigraph(hw, lengths), config, trial);
    out.push_back(certificate_to_json(cert));
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "chip-firing, reduced divisors and Baker-Norine ranks on metric multigraphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<FalsificationError>(m, "FalsificationError", PyExc_RuntimeError);

  py::class_<PyGraph>(m, "Graph")
      .def("vertices", &PyGraph::vertices)
      .def("vertex_count", &PyGraph::vertex_count)
      .def("edge_count", &PyGraph::edge_count)
      .def("genus", &PyGraph::genus_)
      .def("girth", &PyGraph::girth_, "minimum cycle length, None for acyclic graphs")
      .def("bipartition", &PyGraph::classes, "(black, white) vertex names, None if not bipartite")
      .def("edge_connectivity", &PyGraph::connectivity)
      .def("is_trivalent", &PyGraph::trivalent)
      .def("canonical_divisor", &PyGraph::canonical)
      .def("with_lengths", &PyGraph::with_lengths, py::arg("lengths"),
           "copy of the graph with the given edge lengths (\"p/q\" strings by edge id)")
      .def("to_json", &PyGraph::to_json)
      .def("to_dot", &PyGraph::dot);

  m.def("parse_graph", [](const std::string& text) { return PyGraph(parse_graph_json(text)); },
        py::arg("text"), "parse the JSON graph format");
  m.def("catalog",
        [](const std::string& name) { return PyGraph(MetricMultigraph::unit(from_catalog(name))); },
        py::arg("name"), "heawood | fano-levi | figure1 | cycle:<n> | k4 | k4-subdivided");
  m.def("rho", &rho, py::arg("g"), py::arg("r"), py::arg("d"),
        "Brill-Noether number g - (r+1)(g-d+r)");
  m.def("bipartite_girth_bound",
        [](const PyGraph& g) { return bipartite_girth_bound(g.metric.graph); }, py::arg("graph"),
        "girth/2 - 1, a lower bound for the rank of a color-class divisor");
  m.def("cycle_hit_lower_bound",
        [](const PyGraph& g, const std::vector<std::string>& b) {
          std::vector<int> indices;
          for (const auto& name : b) indices.push_back(g.metric.graph.vertex_index(name));
          CycleHitBound bound = cycle_hit_lower_bound(g.metric, indices);
          return py::make_tuple(bound.min_hits, bound.r, bound.rank_determining_certified);
        },
        py::arg("graph"), py::arg("vertices"),
        "(min cycle hits, rank lower bound, rank-determining certified)");
  m.def("_rank_json", &rank_json, py::arg("graph"), py::arg("divisor"),
        py::arg("probe_set") = "auto", py::arg("probe_cap") = kDefaultProbeCap);
  m.def("rank_oracle", &rank_oracle, py::arg("graph"), py::arg("divisor"),
        "brute-force lattice rank; desk-scale caps");
  m.def("reduce", &reduce_metric, py::arg("graph"), py::arg("divisor"), py::arg("base"),
        "q-reduced representative on the subdivision model of the metric graph");
  m.def("scan_girth_bound",
        [](int max_girth) {
          std::vector<std::tuple<int, long long, long long>> out;
          for (const auto& p : girth_genus_scan(max_girth)) {
            out.emplace_back(p.girth, p.genus, p.moore_lower_bound);
          }
          return out;
        },
        py::arg("max_girth"), "(girth, genus, moore_bound) triples with girth^2/4 > genus");
  m.def("_certify_heawood_json", &certify_heawood_json, py::arg("seed") = 42,
        py::arg("trials") = 1, py::arg("numerator_bound") = 10, py::arg("denominator_bound") = 6,
        py::arg("unit_lengths") = true, py::arg("verify") = false);
}
