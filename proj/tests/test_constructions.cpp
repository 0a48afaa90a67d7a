#include <doctest.h>

#include <algorithm>
#include <random>

#include "irgraphs/constructions.hpp"
#include "irgraphs/families.hpp"
#include "irgraphs/irredundance.hpp"
#include "irgraphs/isomorphism.hpp"
#include "irgraphs/reconfig.hpp"
#include "support/census.hpp"

using namespace irgraphs;

namespace {

// The stated IR-set shapes: {u}+X for u in H1, {v}+Y for v in H2.
bool sets_have_stated_form(const DisconnectedSource& built,
                           const std::vector<VertexSet>& sets) {
    VertexSet x, y;
    for (int v : built.x) x.insert(v);
    for (int v : built.y) y.insert(v);
    std::vector<VertexSet> expected;
    for (int u : built.h1) {
        VertexSet s = x;
        s.insert(u);
        expected.push_back(s);
    }
    for (int v : built.h2) {
        VertexSet s = y;
        s.insert(v);
        expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), CanonicalLess{});
    return expected == sets;
}

}  // namespace

TEST_CASE("fixtures") {
    Graph fig1 = fixture(Fixture::Fig1G);
    CHECK(fig1.order() == 6);
    CHECK(fig1.label(0) == "a");
    CHECK(fig1.label(5) == "f");
    CHECK(fig1.edge_list() == std::vector<std::pair<int, int>>{
                                  {0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}});

    Graph fig3 = fixture(Fixture::Fig3G);
    CHECK(fig3.order() == 6);
    CHECK(fig3.label(3) == "e");
    CHECK(fig3.label(5) == "g");

    Graph fig4 = fixture(Fixture::Fig4F);
    CHECK(fig4.order() == 7);
    CHECK(fig4.label(6) == "d");
    // removing d recovers fig3 exactly, labels included
    CHECK(induced_subgraph(fig4, VertexSet::first_n(6)) == fig3);

    CHECK(fixture("FIG1-g") == fig1);
    CHECK_THROWS_AS(fixture("fig2-G"), std::invalid_argument);
}

TEST_CASE("fixture private-neighborhood example") {
    Graph g = fixture("fig1-G");
    // b=1, c=2, d=3; PN(b, {b,c,d}) = {b, e}
    CHECK(private_neighbors(g, VertexSet::of({1, 2, 3}), 1) == VertexSet::of({1, 4}));
}

TEST_CASE("thm31 source: 2K1 with N=2") {
    DisconnectedSourceSpec spec{build_family("2k1"), 0, 2};
    DisconnectedSource built = build_disconnected_source(spec);
    CHECK(built.graph.order() == 6);
    CHECK(built.h1 == std::vector<int>{0});
    CHECK(built.h2 == std::vector<int>{1});
    CHECK(built.x == std::vector<int>{2, 3});
    CHECK(built.y == std::vector<int>{4, 5});

    auto upper = upper_irredundance(built.graph);
    CHECK(upper.IR == 3);
    REQUIRE(upper.sets.size() == 2);
    CHECK(upper.sets[0] == VertexSet::of({0, 2, 3}));
    CHECK(upper.sets[1] == VertexSet::of({1, 4, 5}));
    CHECK(sets_have_stated_form(built, upper.sets));

    IrGraph h = build_ir_graph(built.graph);
    CHECK(are_isomorphic(h.view(), spec.target));
}

TEST_CASE("thm31 source: K2+K1 with N=3") {
    DisconnectedSourceSpec spec{build_family("k2+k1"), 0, 3};
    DisconnectedSource built = build_disconnected_source(spec);
    CHECK(built.graph.order() == 9);
    auto upper = upper_irredundance(built.graph);
    CHECK(upper.IR == 4);
    CHECK(upper.sets.size() == 3);
    CHECK(sets_have_stated_form(built, upper.sets));
    CHECK(are_isomorphic(build_ir_graph(built.graph).view(), spec.target));
}

TEST_CASE("thm31 error paths") {
    CHECK_THROWS_AS(build_disconnected_source({build_family("p3"), 0, -1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_disconnected_source({build_family("2k1"), 0, 1}),
                    std::invalid_argument);  // N below |V(H)|
    CHECK_THROWS_AS(build_disconnected_source({build_family("2k1"), 5, -1}),
                    std::invalid_argument);  // component index out of range
    CHECK_THROWS_AS(build_disconnected_source({build_family("k2+k3"), 0, 62}),
                    std::invalid_argument);  // 5 + 124 vertices
}

TEST_CASE("thm31 alternate component split") {
    Graph h = build_family("k1+k2");  // component 0 = {0}, component 1 = {1,2}
    DisconnectedSource built = build_disconnected_source({h, 1, -1});
    CHECK(built.h1 == std::vector<int>{1, 2});
    CHECK(built.h2 == std::vector<int>{0});
    CHECK(are_isomorphic(build_ir_graph(built.graph).view(), h));
}

TEST_CASE("thm31 labels name the construction") {
    DisconnectedSource built = build_disconnected_source({build_family("2k1"), 0, 2});
    CHECK(built.graph.label(2) == "x1");
    CHECK(built.graph.label(5) == "y2");
}

TEST_CASE("thm31 contract on every disconnected target of order <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (const Graph& target : census::all_graphs(n)) {
            if (is_connected(target)) continue;
            for (int clique : {n, n + 1}) {
                DisconnectedSource built =
                    build_disconnected_source({target, 0, clique});
                auto upper = upper_irredundance(built.graph);
                CHECK(upper.IR == clique + 1);
                CHECK(static_cast<int>(upper.sets.size()) == n);
                CHECK(sets_have_stated_form(built, upper.sets));
                CHECK(are_isomorphic(build_ir_graph(built.graph).view(), target));
            }
        }
}

TEST_CASE("thm31 contract on random order-6 targets") {
    std::mt19937 rng(606);
    int done = 0;
    while (done < 3) {
        Graph target(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (rng() % 2) target.add_edge(u, v);
        if (is_connected(target)) continue;
        ++done;
        for (int clique : {6, 7}) {
            DisconnectedSource built = build_disconnected_source({target, 0, clique});
            auto upper = upper_irredundance(built.graph);
            CHECK(upper.IR == clique + 1);
            CHECK(upper.sets.size() == 6);
            CHECK(sets_have_stated_form(built, upper.sets));
            CHECK(are_isomorphic(build_ir_graph(built.graph).view(), target));
        }
    }
}

TEST_CASE("fig3 and fig4 realize the smallest IR-trees") {
    IrGraph h3 = build_ir_graph(fixture(Fixture::Fig3G));
    CHECK(h3.order() == 6);
    CHECK(are_isomorphic(h3.view(), build_family("doublestar:2,2")));

    IrGraph h4 = build_ir_graph(fixture(Fixture::Fig4F));
    CHECK(h4.order() == 7);
    CHECK(are_isomorphic(h4.view(), build_family("doublespider:1,1;1,2")));
}
