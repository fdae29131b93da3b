#include "chipfire/io.hpp"

#include <fstream>
#include <sstream>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

ordered_json parse_or_throw(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("JSON parse error: ") + e.what());
  }
}

Rational parse_length_field(const ordered_json& edge) {
  if (!edge.contains("length")) return Rational(1);
  const auto& field = edge.at("length");
  if (!field.is_string()) {
    throw GraphError("edge length must be a string like \"3\" or \"3/2\"");
  }
  Rational len = Rational::parse(field.get<std::string>());
  if (!len.is_positive()) {
    throw GraphError("edge length '" + len.str() + "' is not positive");
  }
  return len;
}

}  // namespace

MetricMultigraph graph_from_json(const ordered_json& j) {
  if (!j.is_object()) throw GraphError("graph file must be a JSON object");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) {
    throw GraphError("graph file needs a \"vertices\" array");
  }
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw GraphError("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::vector<Rational> lengths;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_object() || !e.contains("id") || !e.contains("ends")) {
        throw GraphError("each edge needs \"id\" and \"ends\"");
      }
      if (!e.at("id").is_string()) throw GraphError("edge id must be a string");
      const auto& ends = e.at("ends");
      if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string()) {
        throw GraphError("edge \"ends\" must be two vertex names");
      }
      edges.emplace_back(e.at("id").get<std::string>(), ends[0].get<std::string>(),
                         ends[1].get<std::string>());
      lengths.push_back(parse_length_field(e));
    }
  }
  return MetricMultigraph(MultiGraph(std::move(vertices), edges), std::move(lengths));
}

MetricMultigraph parse_graph_json(const std::string& text) {
  return graph_from_json(parse_or_throw(text));
}

ordered_json graph_to_json(const MetricMultigraph& m) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& name : m.graph.vertex_names()) j["vertices"].push_back(name);
  j["edges"] = ordered_json::array();
  for (int e = 0; e < m.graph.edge_count(); ++e) {
    const EdgeRef& edge = m.graph.edge(e);
    ordered_json je;
    je["id"] = edge.id;
    je["ends"] = {m.graph.vertex_name(edge.u), m.graph.vertex_name(edge.v)};
    if (m.lengths[e] != Rational(1)) je["length"] = m.lengths[e].str();
    j["edges"].push_back(std::move(je));
  }
  return j;
}

Divisor divisor_from_json(const MultiGraph& g, const ordered_json& j) {
  if (!j.is_object()) throw GraphError("divisor file must be a JSON object");
  Divisor d(g.vertex_count());
  for (const auto& [name, value] : j.items()) {
    auto v = g.find_vertex(name);
    if (!v) throw GraphError("divisor names unknown vertex '" + name + "'");
    if (!value.is_number_integer()) {
      throw GraphError("divisor coefficient at '" + name + "' must be an integer");
    }
    d[*v] = value.get<long long>();
  }
  return d;
}

Divisor parse_divisor_json(const MultiGraph& g, const std::string& text) {
  return divisor_from_json(g, parse_or_throw(text));
}

ordered_json divisor_to_json(const MultiGraph& g, const Divisor& d) {
  check_attached(g, d);
  ordered_json j = ordered_json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d[v] != 0) j[g.vertex_name(v)] = d[v];
  }
  return j;
}

ordered_json rank_result_to_json(const RankResult& r) {
  const MultiGraph& g = *r.witness_graph;
  ordered_json j;
  j["rank"] = r.rank;
  j["lower_witnesses"] = ordered_json::array();
  for (const auto& w : r.lower_witnesses) {
    ordered_json jw;
    jw["probe"] = divisor_to_json(g, w.probe);
    jw["effective_equivalent"] = divisor_to_json(g, w.effective_equivalent);
    j["lower_witnesses"].push_back(std::move(jw));
  }
  if (r.upper_witness) {
    ordered_json jw;
    jw["probe"] = divisor_to_json(g, r.upper_witness->probe);
    jw["reduced_form"] = divisor_to_json(g, r.upper_witness->reduced_form);
    jw["base_vertex"] = g.vertex_name(r.upper_witness->base_vertex);
    j["upper_witness"] = std::move(jw);
  } else {
    j["upper_witness"] = nullptr;
  }
  return j;
}

std::string to_dot(const MetricMultigraph& m) {
  std::ostringstream out;
  out << "graph {\n";
  for (const auto& name : m.graph.vertex_names()) {
    out << "  \"" << name << "\";\n";
  }
  for (int e = 0; e < m.graph.edge_count(); ++e) {
    const EdgeRef& edge = m.graph.edge(e);
    out << "  \"" << m.graph.vertex_name(edge.u) << "\" -- \"" << m.graph.vertex_name(edge.v)
        << "\" [label=\"" << m.lengths[e].str() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write '" + path + "'");
  out << content;
  if (!out) throw GraphError("write to '" + path + "' failed");
}

}  // namespace chipfire
