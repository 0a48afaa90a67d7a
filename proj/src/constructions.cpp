#include "irgraphs/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace irgraphs {

DisconnectedSource build_disconnected_source(const DisconnectedSourceSpec& spec) {
    const Graph& h = spec.target;
    auto comps = connected_components(h);
    if (comps.size() < 2)
        throw std::invalid_argument("build_disconnected_source: the target must be disconnected");
    if (spec.component_index < 0 ||
        spec.component_index >= static_cast<int>(comps.size()))
        throw std::invalid_argument("build_disconnected_source: component index out of range");

    int n = h.order();
    int clique = spec.clique_size < 0 ? n : spec.clique_size;
    if (clique < n)
        throw std::invalid_argument("build_disconnected_source: N must be at least |V(H)| = " +
                                    std::to_string(n));
    if (n + 2 * clique > Graph::kMaxVertices)
        throw std::invalid_argument("build_disconnected_source: " +
                                    std::to_string(n + 2 * clique) +
                                    " vertices exceed the limit of " +
                                    std::to_string(Graph::kMaxVertices));

    DisconnectedSource out;
    out.h1 = comps[static_cast<std::size_t>(spec.component_index)].to_vector();
    for (int v = 0; v < n; ++v)
        if (!comps[static_cast<std::size_t>(spec.component_index)].contains(v))
            out.h2.push_back(v);
    for (int i = 0; i < clique; ++i) {
        out.x.push_back(n + i);
        out.y.push_back(n + clique + i);
    }

    Graph g(n + 2 * clique);
    for (auto [u, v] : h.edge_list()) g.add_edge(u, v);
    for (int i = 0; i < clique; ++i)
        for (int j = i + 1; j < clique; ++j) {
            g.add_edge(out.x[static_cast<std::size_t>(i)], out.x[static_cast<std::size_t>(j)]);
            g.add_edge(out.y[static_cast<std::size_t>(i)], out.y[static_cast<std::size_t>(j)]);
        }
    for (int u : out.h1) {
        for (int xi : out.x) g.add_edge(xi, u);
        g.add_edge(out.y.front(), u);
    }
    for (int v : out.h2) {
        for (int yi : out.y) g.add_edge(yi, v);
        g.add_edge(out.x.front(), v);
    }
    for (int i = 1; i < clique; ++i)
        g.add_edge(out.x[static_cast<std::size_t>(i)], out.y[static_cast<std::size_t>(i)]);

    for (int v = 0; v < n; ++v) g.set_label(v, h.label(v));
    for (int i = 0; i < clique; ++i) {
        g.set_label(out.x[static_cast<std::size_t>(i)], "x" + std::to_string(i + 1));
        g.set_label(out.y[static_cast<std::size_t>(i)], "y" + std::to_string(i + 1));
    }
    out.graph = std::move(g);
    return out;
}

namespace {

Graph labeled(const std::vector<std::string>& names,
              const std::vector<std::pair<int, int>>& edges) {
    Graph g(static_cast<int>(names.size()));
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (int v = 0; v < g.order(); ++v)
        g.set_label(v, names[static_cast<std::size_t>(v)]);
    return g;
}

}  // namespace

Graph fixture(Fixture which) {
    switch (which) {
        case Fixture::Fig1G:
            // a-b, a-c, a-d, b-e, c-f, d-f
            return labeled({"a", "b", "c", "d", "e", "f"},
                           {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}});
        case Fixture::Fig3G:
            // a-b, a-c, a-e, b-f, c-g, e-g, f-g  (no vertex named d)
            return labeled({"a", "b", "c", "e", "f", "g"},
                           {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
        case Fixture::Fig4F:
            // Fig3G plus d joined to a, b, c and f
            return labeled({"a", "b", "c", "e", "f", "g", "d"},
                           {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}, {4, 5},
                            {6, 0}, {6, 1}, {6, 2}, {6, 4}});
    }
    throw std::invalid_argument("fixture: unknown fixture");
}

Graph fixture(std::string_view name) {
    std::string lower(name);
    std::ranges::transform(lower, lower.begin(),
                           [](unsigned char c) { return std::tolower(c); });
    if (lower == "fig1-g") return fixture(Fixture::Fig1G);
    if (lower == "fig3-g") return fixture(Fixture::Fig3G);
    if (lower == "fig4-f") return fixture(Fixture::Fig4F);
    throw std::invalid_argument("fixture: unknown name '" + std::string(name) +
                                "' (expected fig1-G, fig3-G or fig4-F)");
}

std::vector<std::string_view> fixture_names() {
    return {"fig1-G", "fig3-G", "fig4-F"};
}

}  // namespace irgraphs
