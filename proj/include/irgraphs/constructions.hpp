#pragma once

#include <string_view>
#include <vector>

#include "irgraphs/graph.hpp"

namespace irgraphs {

/// Recipe for a source graph whose IR-graph realizes a disconnected target.
struct DisconnectedSourceSpec {
    Graph target;            // H, must be disconnected
    int component_index = 0; // which component (ordered by smallest vertex) is H1
    int clique_size = -1;    // N >= |V(H)|; -1 means exactly |V(H)|
};

struct DisconnectedSource {
    Graph graph;             // H's vertices first, then X, then Y
    std::vector<int> h1;     // vertices of the chosen component
    std::vector<int> h2;     // vertices of the remaining components
    std::vector<int> x;      // clique joined to H1 (x[0] also joined to H2)
    std::vector<int> y;      // clique joined to H2 (y[0] also joined to H1)
};

/// Supergraph G of H with G[X] and G[Y] complete, X + {y1} joined to all of
/// H1, Y + {x1} joined to all of H2, and x_i ~ y_i for i >= 2. Its IR-sets
/// are exactly {u}+X for u in H1 and {v}+Y for v in H2, so the IR-graph is
/// isomorphic to H.
DisconnectedSource build_disconnected_source(const DisconnectedSourceSpec& spec);

enum class Fixture {
    Fig1G,  // six vertices a..f; two of its IR-sets are {a,b,c} and {b,c,d}
    Fig3G,  // six vertices; its IR-graph is the double star S(2,2)
    Fig4F,  // Fig3G plus a vertex d; IR-graph is the double spider Sp(1,1;1,2)
};

Graph fixture(Fixture which);

/// Accepts "fig1-G", "fig3-G", "fig4-F" (case-insensitive).
Graph fixture(std::string_view name);

std::vector<std::string_view> fixture_names();

}  // namespace irgraphs
