#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "chipfire/chip_firing.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

using ordered_json = nlohmann::ordered_json;

/// Graph file format: {"vertices": [...unique strings...],
/// "edges": [{"id": s, "ends": [s, s], "length": "p/q" | "p"}]}.
/// Omitted "length" defaults to "1"; loops repeat the vertex in "ends".
/// Rejects unknown endpoints, duplicate ids, non-positive lengths and
/// disconnected graphs.
MetricMultigraph parse_graph_json(const std::string& text);
MetricMultigraph graph_from_json(const ordered_json& j);

/// Deterministic emission; "length" is omitted for unit edges.
ordered_json graph_to_json(const MetricMultigraph& m);

/// Divisor file format: object mapping vertex name -> integer.
/// Unknown vertex names are rejected.
Divisor parse_divisor_json(const MultiGraph& g, const std::string& text);
Divisor divisor_from_json(const MultiGraph& g, const ordered_json& j);

/// Nonzero coefficients in vertex order.
ordered_json divisor_to_json(const MultiGraph& g, const Divisor& d);

ordered_json rank_result_to_json(const RankResult& r);

/// DOT with deterministic vertex order; edge label = length.
std::string to_dot(const MetricMultigraph& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace chipfire
