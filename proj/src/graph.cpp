#include "irgraphs/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace irgraphs {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 0.." +
                                    std::to_string(kMaxVertices) + ", got " +
                                    std::to_string(n));
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

int Graph::num_edges() const {
    int total = 0;
    for (const auto& row : adj_) total += row.size();
    return total / 2;
}

VertexSet Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
}

VertexSet Graph::closed_neighborhood(const VertexSet& d) const {
    VertexSet s = d;
    d.for_each([&](int v) { s |= neighbors(v); });
    return s;
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (!labels_.empty() && !labels_[static_cast<std::size_t>(v)].empty())
        return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    if (g.order() == 0) return dist;
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.neighbors(u).for_each([&](int v) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

std::optional<int> distance(const Graph& g, int u, int v) {
    int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<int> diameter(const Graph& g) {
    if (g.order() <= 1) return 0;
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        bool found = false;
        g.neighbors(u).for_each([&](int v) {
            if (v > u && (g.neighbors(u) & g.neighbors(v)).has_member_above(v))
                found = true;
        });
        if (found) return true;
    }
    return false;
}

namespace {

// Induced C4 through the nonadjacent pair (u, v): two nonadjacent common
// neighbors complete it.
bool c4_on_pair(const Graph& g, int u, int v) {
    VertexSet common = g.neighbors(u) & g.neighbors(v);
    bool found = false;
    common.for_each([&](int x) {
        VertexSet rest = common - g.neighbors(x);
        rest.erase(x);
        if (!rest.empty()) found = true;
    });
    return found;
}

}  // namespace

bool has_induced_c4(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && c4_on_pair(g, u, v)) return true;
    return false;
}

bool has_induced_c4_through(const Graph& g, int v) {
    // v is one endpoint of a diagonal of the 4-cycle.
    for (int u = 0; u < g.order(); ++u)
        if (u != v && !g.has_edge(u, v) && c4_on_pair(g, u, v)) return true;
    return false;
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out;
    VertexSet all = g.vertices();
    for (int v = 0; v < g.order(); ++v)
        if (g.closed_neighborhood(v) == all) out.insert(v);
    return out;
}

bool is_complete(const Graph& g) {
    return universal_vertices(g).size() == g.order();
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int v = 0; v < g.order(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp;
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < g.order(); ++u)
            if (dist[static_cast<std::size_t>(u)] >= 0) comp.insert(u);
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> old_of = keep.to_vector();
    std::vector<int> new_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < old_of.size(); ++i)
        new_of[static_cast<std::size_t>(old_of[i])] = static_cast<int>(i);

    Graph out(static_cast<int>(old_of.size()));
    for (std::size_t i = 0; i < old_of.size(); ++i) {
        int u = old_of[i];
        (g.neighbors(u) & keep).for_each([&](int v) {
            if (u < v) out.add_edge(static_cast<int>(i), new_of[static_cast<std::size_t>(v)]);
        });
    }
    if (g.has_labels())
        for (std::size_t i = 0; i < old_of.size(); ++i)
            out.set_label(static_cast<int>(i), g.label(old_of[i]));
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("disjoint union exceeds the vertex limit");
    Graph out(n);
    for (auto [u, v] : g.edge_list()) out.add_edge(u, v);
    for (auto [u, v] : h.edge_list()) out.add_edge(g.order() + u, g.order() + v);
    if (g.has_labels() || h.has_labels()) {
        for (int v = 0; v < g.order(); ++v) out.set_label(v, g.label(v));
        for (int v = 0; v < h.order(); ++v) out.set_label(g.order() + v, h.label(v));
    }
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    long long n = static_cast<long long>(g.order()) * h.order();
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("cartesian product exceeds the vertex limit");
    Graph out(static_cast<int>(n));
    auto id = [&](int i, int j) { return i * h.order() + j; };
    for (int i = 0; i < g.order(); ++i)
        for (auto [u, v] : h.edge_list()) out.add_edge(id(i, u), id(i, v));
    for (int j = 0; j < h.order(); ++j)
        for (auto [u, v] : g.edge_list()) out.add_edge(id(u, j), id(v, j));
    return out;
}

}  // namespace irgraphs
