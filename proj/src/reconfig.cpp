#include "irgraphs/reconfig.hpp"

#include <algorithm>
#include <string>

namespace irgraphs {

std::optional<std::pair<int, int>> token_slide_adjacent(const Graph& g,
                                                        const VertexSet& d,
                                                        const VertexSet& d_prime) {
    VertexSet out = d - d_prime;
    VertexSet in = d_prime - d;
    if (out.size() != 1 || in.size() != 1) return std::nullopt;
    int u = out.front();
    int v = in.front();
    if (!g.has_edge(u, v)) return std::nullopt;
    return std::pair{u, v};
}

IrGraph::IrGraph(Graph source, std::vector<VertexSet> nodes,
                 std::vector<IrGraphEdge> edges)
    : source_(std::move(source)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    view_ = Graph(static_cast<int>(nodes_.size()));
    for (const IrGraphEdge& e : edges_) view_.add_edge(e.i, e.j);
    for (int i = 0; i < view_.order(); ++i) {
        std::string label = "{";
        bool first = true;
        nodes_[static_cast<std::size_t>(i)].for_each([&](int v) {
            if (!first) label += ",";
            label += source_.label(v);
            first = false;
        });
        label += "}";
        view_.set_label(i, label);
    }
}

int IrGraph::index_of(const VertexSet& d) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), d, CanonicalLess{});
    if (it == nodes_.end() || !(*it == d)) return -1;
    return static_cast<int>(it - nodes_.begin());
}

NodeCapExceeded::NodeCapExceeded(long long node_count_, int cap_)
    : std::runtime_error("IR-graph refused: " + std::to_string(node_count_) +
                         " IR-sets exceed the node cap " + std::to_string(cap_)),
      node_count(node_count_),
      cap(cap_) {}

IrGraph build_ir_graph(const Graph& g, int node_cap) {
    if (node_cap <= 0) throw std::invalid_argument("build_ir_graph: cap must be positive");
    UpperIrredundance upper = upper_irredundance(g);
    auto count = static_cast<long long>(upper.sets.size());
    if (count > node_cap) throw NodeCapExceeded(count, node_cap);

    std::vector<IrGraphEdge> edges;
    const auto& nodes = upper.sets;
    // Hot loop: O(m^2) over IR-sets. If this ever dominates, index the
    // sets by their (set minus one vertex) signatures instead.
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if ((nodes[i] ^ nodes[j]).size() != 2) continue;
            if (auto swap = token_slide_adjacent(g, nodes[i], nodes[j]))
                edges.push_back({static_cast<int>(i), static_cast<int>(j),
                                 swap->first, swap->second});
        }
    return IrGraph(g, nodes, std::move(edges));
}

}  // namespace irgraphs
