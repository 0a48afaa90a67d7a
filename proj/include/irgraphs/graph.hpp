#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irgraphs/vertex_set.hpp"

namespace irgraphs {

/// Simple labeled graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable in practice once built: every algorithm here takes it by
/// const reference and returns fresh values.
class Graph {
public:
    static constexpr int kMaxVertices = VertexSet::kMaxVertices;

    explicit Graph(int n = 0);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int num_edges() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighborhood(int v) const;
    /// N[D].
    VertexSet closed_neighborhood(const VertexSet& d) const;
    int degree(int v) const { return neighbors(v).size(); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    bool has_labels() const { return !labels_.empty(); }
    void set_label(int v, std::string label);
    /// Stored label, or the decimal index when none was set.
    std::string label(int v) const;

    std::vector<std::pair<int, int>> edge_list() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;  // empty vector when unlabeled
};

// ---- traversal and structural queries ----

/// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);

/// std::nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

/// std::nullopt when g is disconnected; 0 for graphs of order <= 1.
std::optional<int> diameter(const Graph& g);

bool has_triangle(const Graph& g);

/// True iff some four vertices induce exactly a 4-cycle.
bool has_induced_c4(const Graph& g);

/// True iff v lies on an induced 4-cycle.
bool has_induced_c4_through(const Graph& g, int v);

/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

bool is_complete(const Graph& g);

int max_degree(const Graph& g);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Subgraph induced by `keep`, vertices renumbered in ascending order,
/// labels preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// H's vertices are shifted by |V(G)|. Labels carried over.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertex (i, j) of G box H maps to index i*|V(H)| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace irgraphs
