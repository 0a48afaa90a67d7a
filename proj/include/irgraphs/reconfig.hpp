#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "irgraphs/graph.hpp"
#include "irgraphs/irredundance.hpp"

namespace irgraphs {

/// The swap pair (u, v) such that D' = (D - {u}) + {v} with uv an edge,
/// or std::nullopt when D and D' are not one adjacent swap apart.
std::optional<std::pair<int, int>> token_slide_adjacent(const Graph& g,
                                                        const VertexSet& d,
                                                        const VertexSet& d_prime);

struct IrGraphEdge {
    int i, j;  // node indices, i < j
    int u, v;  // nodes[i] - {u} + {v} == nodes[j], uv an edge of the source
};

/// Reconfiguration graph of the IR-sets under single-vertex slides.
class IrGraph {
public:
    IrGraph(Graph source, std::vector<VertexSet> nodes, std::vector<IrGraphEdge> edges);

    const Graph& source() const { return source_; }
    /// Canonical IR-set list; node i of the derived view is nodes()[i].
    const std::vector<VertexSet>& nodes() const { return nodes_; }
    const std::vector<IrGraphEdge>& edges() const { return edges_; }

    int order() const { return static_cast<int>(nodes_.size()); }

    /// Index of an IR-set in the canonical node list, or -1.
    int index_of(const VertexSet& d) const;

    /// Simple graph on the node indices; labels are the vertex lists.
    const Graph& view() const { return view_; }

private:
    Graph source_;
    std::vector<VertexSet> nodes_;
    std::vector<IrGraphEdge> edges_;
    Graph view_{0};
};

struct NodeCapExceeded : std::runtime_error {
    NodeCapExceeded(long long node_count, int cap);
    long long node_count;
    int cap;
};

inline constexpr int kDefaultNodeCap = 20000;

/// Enumerate the IR-sets and connect every slide-adjacent pair. Refuses
/// (NodeCapExceeded) when more than node_cap IR-sets exist: a partial
/// IR-graph would be worthless for isomorphism claims.
IrGraph build_ir_graph(const Graph& g, int node_cap = kDefaultNodeCap);

}  // namespace irgraphs
