#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <string_view>

#include "irgraphs/graph.hpp"
#include "irgraphs/irredundance.hpp"
#include "irgraphs/reconfig.hpp"

namespace irgraphs {

std::string to_dot(const Graph& g, std::string_view name = "G");

/// {"n": ..., "edges": [[u,v], ...]} plus "labels" when present.
nlohmann::json graph_to_json(const Graph& g);

/// Inverse of graph_to_json; "labels" optional.
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const IrredundanceReport& report);

/// Nodes carry their vertex lists; edges carry the swap labels "u→v".
std::string to_dot(const IrGraph& h, std::string_view name = "IR");

nlohmann::json ir_graph_to_json(const IrGraph& h);

/// One-line CLI-style report, e.g. "ir=1 IR=1 sets=[{0},{1}]".
std::string report_to_text(const IrredundanceReport& report);

std::string set_to_text(const VertexSet& s);

/// Shared graph-argument parser: a graph6 literal, "@path" reading the
/// first graph6 line of a file, or a family spec such as "path4" or
/// "doublespider:1,1;1,2".
Graph resolve_graph_argument(std::string_view arg);

}  // namespace irgraphs
