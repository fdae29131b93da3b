#include <CLI11.hpp>
#include <iostream>
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

namespace {

using namespace chipfire;

// exit codes: 0 success, 1 mathematical claim falsified, 2 usage/resource/IO
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

MetricMultigraph load_graph(const std::string& path) {
  return parse_graph_json(read_text_file(path));
}

std::optional<std::vector<int>> auto_probe_set(const MetricMultigraph& m) {
  auto classes = bipartition(m.graph);
  if (!classes) return std::nullopt;
  if (certify_rank_determining(m, classes->black)) return classes->black;
  if (certify_rank_determining(m, classes->white)) return classes->white;
  return std::nullopt;
}

void verify_rank_result(const Divisor& d, const RankResult& r) {
  const MultiGraph& g = *r.witness_graph;
  Divisor lifted(g.vertex_count());
  for (int v = 0; v < d.size(); ++v) lifted[v] = d[v];
  for (const auto& w : r.lower_witnesses) {
    if (!w.effective_equivalent.is_effective() ||
        !is_equivalent(g, lifted - w.probe, w.effective_equivalent)) {
      throw FalsificationError("rank lower witness failed the cross-check",
                               rank_result_to_json(r).dump());
    }
  }
  if (r.upper_witness) {
    const UpperWitness& up = *r.upper_witness;
    if (up.reduced_form[up.base_vertex] >= 0 || !is_reduced(g, up.reduced_form, up.base_vertex) ||
        !is_equivalent(g, lifted - up.probe, up.reduced_form)) {
      throw FalsificationError("rank upper witness failed the cross-check",
                               rank_result_to_json(r).dump());
    }
  }
}

struct CertifyOutcome {
  ordered_json payload;
  std::string text;
  bool falsified = false;
};

CertifyOutcome run_certify_heawood(const RunConfig& config, const std::string& lengths_mode) {
  MultiGraph hw = heawood();
  Rng rng(config.seed);

  std::vector<Rational> fixed_lengths;
  if (lengths_mode != "unit" && lengths_mode != "random") {
    ordered_json lengths_json;
    try {
      lengths_json = ordered_json::parse(read_text_file(lengths_mode));
    } catch (const nlohmann::json::parse_error& e) {
      throw GraphError(std::string("lengths file: ") + e.what());
    }
    if (!lengths_json.is_object()) throw GraphError("lengths file must map edge ids to lengths");
    fixed_lengths.assign(hw.edge_count(), Rational(1));
    std::vector<char> seen(hw.edge_count(), 0);
    for (const auto& [id, value] : lengths_json.items()) {
      int found = -1;
      for (int e = 0; e < hw.edge_count(); ++e) {
        if (hw.edge(e).id == id) {
          found = e;
          break;
        }
      }
      if (found < 0) throw GraphError("lengths file names unknown edge '" + id + "'");
      if (!value.is_string()) throw GraphError("length of '" + id + "' must be a string");
      fixed_lengths[found] = Rational::parse(value.get<std::string>());
      seen[found] = 1;
    }
    for (int e = 0; e < hw.edge_count(); ++e) {
      if (!seen[e]) throw GraphError("lengths file is missing edge '" + hw.edge(e).id + "'");
    }
  }

  CertifyOutcome outcome;
  outcome.payload["certificates"] = ordered_json::array();
  for (long long trial = 0; trial < config.trials; ++trial) {
    std::vector<Rational> lengths;
    if (lengths_mode == "unit") {
      lengths.assign(hw.edge_count(), Rational(1));
    } else if (lengths_mode == "random") {
      lengths = random_lengths(rng, hw.edge_count(), config.numerator_bound,
                               config.denominator_bound);
    } else {
      lengths = fixed_lengths;
    }
    MetricMultigraph m(hw, lengths);
    try {
      SpecialnessCertificate cert = certify_special(m, config, trial);
      std::cerr << "trial " << trial << ": rank " << cert.rank_result.rank << ", rho "
                << cert.rho_value << "\n";
      outcome.payload["certificates"].push_back(certificate_to_json(cert));
      outcome.text += certificate_to_text(cert) + "\n";
    } catch (const FalsificationError& e) {
      std::cerr << "trial " << trial << ": FALSIFIED: " << e.what() << "\n";
      ordered_json fal;
      fal["trial"] = trial;
      fal["error"] = e.what();
      fal["counterexample"] = ordered_json::parse(e.counterexample_json);
      outcome.payload["falsified"] = std::move(fal);
      outcome.text += std::string("FALSIFIED at trial ") + std::to_string(trial) + ": " +
                      e.what() + "\n";
      outcome.falsified = true;
      break;
    }
  }
  outcome.payload["all_certified"] = !outcome.falsified;
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divisor theory on metric multigraphs: chip-firing, reduced divisors,\n"
               "Baker-Norine ranks, and Brill-Noether specialness certificates"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "structural report for a graph file");
  std::string info_graph;
  bool info_json = false;
  info->add_option("graph", info_graph, "graph JSON file")->required();
  info->add_flag("--json", info_json, "emit JSON instead of text");

  auto* rank_cmd = app.add_subcommand("rank", "Baker-Norine rank of a divisor");
  std::string rank_graph, rank_divisor, rank_out;
  std::string rank_method = "subdivision", rank_probe = "auto";
  long long rank_probe_cap = kDefaultProbeCap;
  bool rank_verify = false;
  rank_cmd->add_option("graph", rank_graph, "graph JSON file")->required();
  rank_cmd->add_option("--divisor", rank_divisor, "divisor JSON file")->required();
  rank_cmd->add_option("--method", rank_method, "subdivision|oracle")
      ->check(CLI::IsMember({"subdivision", "oracle"}));
  rank_cmd->add_option("--probe-set", rank_probe, "auto|off")
      ->check(CLI::IsMember({"auto", "off"}));
  rank_cmd->add_option("--probe-cap", rank_probe_cap, "probe cap per rank level")
      ->check(CLI::PositiveNumber);
  rank_cmd->add_flag("--verify", rank_verify, "re-verify every witness");
  rank_cmd->add_option("-o,--output", rank_out, "write JSON here instead of stdout");

  auto* reduce_cmd = app.add_subcommand("reduce", "q-reduced representative on the metric graph");
  std::string reduce_graph, reduce_divisor, reduce_base, reduce_out;
  reduce_cmd->add_option("graph", reduce_graph, "graph JSON file")->required();
  reduce_cmd->add_option("--divisor", reduce_divisor, "divisor JSON file")->required();
  reduce_cmd->add_option("--base", reduce_base, "base vertex q")->required();
  reduce_cmd->add_option("-o,--output", reduce_out, "write JSON here instead of stdout");

  auto* rho_cmd = app.add_subcommand("rho", "Brill-Noether number g - (r+1)(g-d+r)");
  long long rho_g = 0, rho_r = 0, rho_d = 0;
  rho_cmd->add_option("g", rho_g, "genus")->required();
  rho_cmd->add_option("r", rho_r, "rank")->required();
  rho_cmd->add_option("d", rho_d, "degree")->required();

  auto* certify = app.add_subcommand("certify", "specialness certification");
  certify->require_subcommand(1);
  auto* certify_heawood =
      certify->add_subcommand("heawood", "certify metrics on the Heawood graph");
  RunConfig config;
  std::string lengths_mode = "unit", certify_format = "json", certify_out;
  certify_heawood->add_option("--lengths", lengths_mode,
                              "unit, random, or a JSON file of edge lengths");
  certify_heawood->add_option("--seed", config.seed, "random seed");
  certify_heawood->add_option("--trials", config.trials, "number of metrics to certify")
      ->check(CLI::PositiveNumber);
  certify_heawood->add_option("--numerator-bound", config.numerator_bound, "max numerator")
      ->check(CLI::PositiveNumber);
  certify_heawood->add_option("--denominator-bound", config.denominator_bound, "max denominator")
      ->check(CLI::PositiveNumber);
  certify_heawood->add_option("--cycle-cap", config.cycle_cap, "cycle enumeration cap")
      ->check(CLI::PositiveNumber);
  certify_heawood->add_option("--probe-cap", config.probe_cap, "probe cap per rank level")
      ->check(CLI::PositiveNumber);
  certify_heawood->add_flag("--verify", config.verify, "revalidate every certificate");
  certify_heawood->add_option("--format", certify_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  certify_heawood->add_option("-o,--output", certify_out, "write output here instead of stdout");

  auto* scan = app.add_subcommand("scan", "feasibility scans");
  scan->require_subcommand(1);
  auto* scan_girth = scan->add_subcommand(
      "girth-bound", "even girth/genus pairs with girth^2/4 > genus up to the bound");
  int scan_max = 0;
  scan_girth->add_option("max-girth", scan_max, "even upper bound for the girth")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in graphs");
  catalog->require_subcommand(1);
  auto* catalog_build = catalog->add_subcommand("build", "emit a catalog graph as JSON");
  std::string catalog_name, catalog_out;
  catalog_build
      ->add_option("name", catalog_name, "heawood|fano-levi|figure1|cycle:<n>|k4|k4-subdivided")
      ->required();
  catalog_build->add_option("-o,--output", catalog_out, "write JSON here instead of stdout");

  auto* export_cmd = app.add_subcommand("export", "exports");
  export_cmd->require_subcommand(1);
  auto* export_dot = export_cmd->add_subcommand("dot", "Graphviz DOT with lengths as labels");
  std::string dot_graph, dot_out;
  export_dot->add_option("graph", dot_graph, "graph JSON file")->required();
  export_dot->add_option("-o,--output", dot_out, "write DOT here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) {
      MetricMultigraph m = load_graph(info_graph);
      const MultiGraph& g = m.graph;
      auto gr = girth(g);
      auto classes = bipartition(g);
      std::optional<int> connectivity;
      if (g.vertex_count() >= 2) connectivity = edge_connectivity(g);
      if (info_json) {
        ordered_json j;
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["genus"] = genus(g);
        j["girth"] = gr ? ordered_json(*gr) : ordered_json(nullptr);
        j["bipartite"] = classes.has_value();
        if (classes) {
          j["bipartition"] = {{"black", ordered_json::array()}, {"white", ordered_json::array()}};
          for (int v : classes->black) j["bipartition"]["black"].push_back(g.vertex_name(v));
          for (int v : classes->white) j["bipartition"]["white"].push_back(g.vertex_name(v));
        }
        j["edge_connectivity"] = connectivity ? ordered_json(*connectivity) : ordered_json(nullptr);
        j["trivalent"] = g.is_trivalent();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "vertices: " << g.vertex_count() << "\n";
        std::cout << "edges: " << g.edge_count() << "\n";
        std::cout << "genus: " << genus(g) << "\n";
        std::cout << "girth: " << (gr ? std::to_string(*gr) : "infinite") << "\n";
        if (classes) {
          std::cout << "bipartite: yes (" << classes->black.size() << " + "
                    << classes->white.size() << ")\n";
        } else {
          std::cout << "bipartite: no\n";
        }
        std::cout << "edge connectivity: "
                  << (connectivity ? std::to_string(*connectivity) : "undefined") << "\n";
        std::cout << "trivalent: " << (g.is_trivalent() ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (*rank_cmd) {
      MetricMultigraph m = load_graph(rank_graph);
      Divisor d = parse_divisor_json(m.graph, read_text_file(rank_divisor));
      ordered_json j;
      if (rank_method == "oracle") {
        Model model = subdivision_model(m);
        Divisor lifted(model.graph->vertex_count());
        for (int v = 0; v < m.graph.vertex_count(); ++v) lifted[v] = d[v];
        j["method"] = "oracle";
        j["rank"] = oracle::rank_bruteforce(*model.graph, lifted);
      } else {
        RankOptions opts;
        opts.probe_cap = rank_probe_cap;
        std::optional<std::vector<int>> probes;
        if (rank_probe == "auto") probes = auto_probe_set(m);
        RankResult r = rank_metric(m, d, probes, opts);
        if (rank_verify) verify_rank_result(d, r);
        j["method"] = "subdivision";
        ordered_json rr = rank_result_to_json(r);
        for (auto& [key, value] : rr.items()) j[key] = value;
      }
      emit(j.dump(2) + "\n", rank_out);
      return 0;
    }

    if (*reduce_cmd) {
      MetricMultigraph m = load_graph(reduce_graph);
      Model model = subdivision_model(m);
      Divisor d = parse_divisor_json(*model.graph, read_text_file(reduce_divisor));
      int base = model.graph->vertex_index(reduce_base);
      Divisor reduced = reduce(*model.graph, d, base);
      emit(divisor_to_json(*model.graph, reduced).dump(2) + "\n", reduce_out);
      return 0;
    }

    if (*rho_cmd) {
      std::cout << rho(rho_g, rho_r, rho_d) << "\n";
      return 0;
    }

    if (*certify_heawood) {
      CertifyOutcome outcome = run_certify_heawood(config, lengths_mode);
      if (certify_format == "text") {
        emit(outcome.text, certify_out);
      } else {
        emit(outcome.payload.dump(2) + "\n", certify_out);
      }
      return outcome.falsified ? kExitFalsified : 0;
    }

    if (*scan_girth) {
      ordered_json j = ordered_json::array();
      for (const auto& p : girth_genus_scan(scan_max)) {
        j.push_back(
            {{"girth", p.girth}, {"genus", p.genus}, {"moore_lower_bound", p.moore_lower_bound}});
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*catalog_build) {
      MultiGraph g = from_catalog(catalog_name);
      emit(graph_to_json(MetricMultigraph::unit(g)).dump(2) + "\n", catalog_out);
      return 0;
    }

    if (*export_dot) {
      emit(to_dot(load_graph(dot_graph)), dot_out);
      return 0;
    }
  } catch (const FalsificationError& e) {
    ordered_json j;
    j["error"] = e.what();
    j["counterexample"] = ordered_json::parse(e.counterexample_json);
    std::cout << j.dump(2) << "\n";
    std::cerr << "falsified: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cerr << "no command selected\n";
  return kExitUsage;
}
