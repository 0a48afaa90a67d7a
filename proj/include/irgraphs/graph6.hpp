#pragma once

#include <string>
#include <string_view>

#include "irgraphs/graph.hpp"

namespace irgraphs {

/// Decode one graph6 line (optional ">>graph6<<" header, no trailing
/// newline required). Throws std::invalid_argument on malformed input
/// or when the encoded order exceeds the vertex limit.
Graph parse_graph6(std::string_view text);

/// Encode without header or newline; round-trips with parse_graph6.
std::string emit_graph6(const Graph& g);

}  // namespace irgraphs
