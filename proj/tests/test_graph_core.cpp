#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "irgraphs/families.hpp"
#include "irgraphs/graph.hpp"
#include "irgraphs/graph6.hpp"
#include "irgraphs/isomorphism.hpp"
#include "irgraphs/vertex_set.hpp"

using namespace irgraphs;

namespace {

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edge_list())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({3, 0, 100});
    CHECK(s.size() == 3);
    CHECK(s.contains(100));
    CHECK_FALSE(s.contains(1));
    CHECK(s.front() == 0);
    CHECK(s.next_after(3) == 100);
    CHECK(s.next_after(100) == -1);
    CHECK(s.to_vector() == std::vector<int>{0, 3, 100});
    s.erase(0);
    CHECK(s.size() == 2);
    CHECK((VertexSet::of({1, 2}) | VertexSet::of({2, 3})) == VertexSet::of({1, 2, 3}));
    CHECK((VertexSet::of({1, 2}) - VertexSet::of({2, 3})) == VertexSet::of({1}));
    CHECK(VertexSet::of({1, 2}).intersects(VertexSet::of({2})));
    CHECK(VertexSet::of({1}).is_subset_of(VertexSet::of({0, 1})));
    CHECK(VertexSet::first_n(3) == VertexSet::of({0, 1, 2}));
}

TEST_CASE("canonical order matches lexicographic vertex lists") {
    CHECK(canonical_less(VertexSet::of({0, 3}), VertexSet::of({1, 2})));
    CHECK(canonical_less(VertexSet::of({1, 2}), VertexSet::of({1, 3})));
    CHECK(canonical_less(VertexSet::of({1}), VertexSet::of({1, 3})));
    CHECK_FALSE(canonical_less(VertexSet::of({1, 3}), VertexSet::of({1})));

    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> vertex(0, 127);
    for (int trial = 0; trial < 2000; ++trial) {
        VertexSet a, b;
        for (int i = 0; i < vertex(rng) % 8; ++i) a.insert(vertex(rng));
        for (int i = 0; i < vertex(rng) % 8; ++i) b.insert(vertex(rng));
        auto va = a.to_vector(), vb = b.to_vector();
        bool expected = std::lexicographical_compare(va.begin(), va.end(),
                                                     vb.begin(), vb.end());
        CHECK(canonical_less(a, b) == expected);
    }
}

TEST_CASE("graph construction and validation") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Graph(129), std::invalid_argument);

    g.set_label(0, "a");
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "1");
}

TEST_CASE("graph6 frozen vectors") {
    SUBCASE("K2") {
        Graph g = parse_graph6("A_");
        CHECK(g.order() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(emit_graph6(g) == "A_");
    }
    SUBCASE("edgeless pair") {
        Graph g = parse_graph6("A?");
        CHECK(g.order() == 2);
        CHECK(g.num_edges() == 0);
    }
    SUBCASE("edgeless on five vertices") {
        Graph g = parse_graph6("D??");
        CHECK(g.order() == 5);
        CHECK(g.num_edges() == 0);
        CHECK(emit_graph6(g) == "D??");
    }
    SUBCASE("empty graph") {
        CHECK(parse_graph6("?").order() == 0);
        CHECK(emit_graph6(Graph(0)) == "?");
    }
    SUBCASE("P3") {
        Graph g = parse_graph6("Bg");
        CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    }
    SUBCASE("six vertices") {
        Graph g = parse_graph6("E?j?");
        CHECK(g.edge_list() ==
              std::vector<std::pair<int, int>>{{0, 4}, {0, 5}, {1, 5}, {2, 4}});
        CHECK(emit_graph6(g) == "E?j?");
    }
    SUBCASE("twelve vertices") {
        Graph g = parse_graph6("KAflmc@[GCJq");
        std::vector<std::pair<int, int>> expected{
            {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 3},  {1, 5},  {1, 7},
            {1, 9}, {1, 11}, {2, 5}, {2, 6}, {2, 9},  {3, 4},  {3, 6},
            {3, 7}, {3, 9},  {3, 11}, {4, 5}, {4, 11}, {5, 6},  {5, 11},
            {6, 7}, {6, 10}, {6, 11}, {7, 8}, {8, 9},  {9, 11}};
        CHECK(g.edge_list() == expected);
        CHECK(emit_graph6(g) == "KAflmc@[GCJq");
    }
    SUBCASE("header accepted") {
        CHECK(parse_graph6(">>graph6<<A_").has_edge(0, 1));
    }
    SUBCASE("multi-byte order") {
        Graph g(100);
        g.add_edge(0, 99);
        std::string enc = emit_graph6(g);
        CHECK(enc.substr(0, 4) == std::string{126} + "?@c");
        Graph back = parse_graph6(enc);
        CHECK(back.order() == 100);
        CHECK(back.has_edge(0, 99));
    }
}

TEST_CASE("graph6 error handling") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);      // missing edge byte
    CHECK_THROWS_AS(parse_graph6("A_?"), std::invalid_argument);    // trailing byte
    CHECK_THROWS_AS(parse_graph6("B\x1f"), std::invalid_argument);  // non-printable
    CHECK_THROWS_AS(parse_graph6("A`"), std::invalid_argument);     // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~?A@"), std::invalid_argument);   // order 129 > limit
    CHECK_THROWS_AS(parse_graph6("~?"), std::invalid_argument);     // truncated order
}

TEST_CASE("graph6 round-trip property") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 129);
        Graph g = random_graph(n, rng, 0.3);
        Graph back = parse_graph6(emit_graph6(g));
        CHECK(back.order() == g.order());
        CHECK(back.edge_list() == g.edge_list());
    }
}

TEST_CASE("family builders") {
    SUBCASE("double star") {
        Graph g = build_family(family::DoubleStar{2, 2});
        CHECK(g.order() == 6);
        CHECK(diameter(g) == 3);
        CHECK(g.has_edge(0, 1));
        CHECK(g.degree(0) == 3);
    }
    SUBCASE("double star diameters") {
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 4; ++n)
                CHECK(diameter(build_family(family::DoubleStar{k, n})) == 3);
    }
    SUBCASE("double spider") {
        Graph g = build_family(family::DoubleSpider{{1, 1}, {1, 2}});
        CHECK(g.order() == 7);
        CHECK(diameter(g) == 4);
    }
    SUBCASE("spider with no subdivisions is P3") {
        CHECK(are_isomorphic(build_family(family::Spider{{1, 1}}),
                             build_family(family::Path{3})));
    }
    SUBCASE("hypercubes are iterated K2 products") {
        Graph q = build_family(family::Complete{1});
        for (int n = 1; n <= 4; ++n) {
            q = cartesian_product(q, build_family(family::Complete{2}));
            CHECK(are_isomorphic(q, build_family(family::Hypercube{n})));
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(build_family(family::Cycle{2}), std::invalid_argument);
        CHECK_THROWS_AS(build_family(family::Star{0}), std::invalid_argument);
        CHECK_THROWS_AS(build_family(family::DoubleStar{0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(build_family(family::Spider{{1}}), std::invalid_argument);
        CHECK_THROWS_AS(build_family(family::Spider{{0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(build_family(family::Hypercube{8}), std::invalid_argument);
    }
}

TEST_CASE("family spec grammar") {
    CHECK(build_family("path4").order() == 4);
    CHECK(build_family("p4").num_edges() == 3);
    CHECK(build_family("k5").num_edges() == 10);
    CHECK(build_family("c6").order() == 6);
    CHECK(build_family("q3").order() == 8);
    CHECK(build_family("star:3").order() == 4);
    CHECK(build_family("doublestar:2,2").order() == 6);
    CHECK(build_family("doublespider:1,1;1,2").order() == 7);
    CHECK(build_family("spider:2,3").order() == 6);
    CHECK(build_family("2k2").num_edges() == 2);
    CHECK(build_family("2k2").order() == 4);
    CHECK(are_isomorphic(build_family("k2*k2"), build_family("c4")));
    CHECK(build_family("k3+p2").order() == 5);
    CHECK(build_family("2(k2*k2)").order() == 8);
    CHECK(build_family(" doublestar:2,2 ").order() == 6);

    CHECK_THROWS_AS(build_family("nosuch:1"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("k2 extra"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("doublespider:1,1"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("k"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("(k2"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("0k2"), std::invalid_argument);
}

TEST_CASE("union and product identities") {
    Graph g = build_family("p4");
    CHECK(disjoint_union(g, Graph(0)) == g);
    CHECK(are_isomorphic(cartesian_product(build_family("k1"), g), g));
    CHECK(are_isomorphic(cartesian_product(build_family("k2"), build_family("k2")),
                         build_family("c4")));
}

TEST_CASE("structural queries") {
    CHECK(has_induced_c4(build_family("c4")));
    CHECK_FALSE(has_induced_c4(build_family("k4")));
    CHECK_FALSE(has_induced_c4(build_family("c6")));
    CHECK(has_induced_c4(build_family("q3")));
    CHECK(has_triangle(build_family("k3")));
    CHECK_FALSE(has_triangle(build_family("c4")));

    Graph star3 = build_family("star:3");
    CHECK(universal_vertices(star3) == VertexSet::of({0}));
    CHECK(universal_vertices(build_family("k4")).size() == 4);
    CHECK(is_complete(build_family("k4")));
    CHECK_FALSE(is_complete(star3));
    CHECK(is_complete(Graph(1)));
    CHECK(is_complete(Graph(0)));

    Graph p5 = build_family("p5");
    CHECK(distance(p5, 0, 4) == 4);
    CHECK(diameter(p5) == 4);
    CHECK(is_connected(p5));

    Graph two = build_family("2k2");
    CHECK_FALSE(is_connected(two));
    CHECK(distance(two, 0, 2) == std::nullopt);
    CHECK(diameter(two) == std::nullopt);
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of({0, 1}));
    CHECK(comps[1] == VertexSet::of({2, 3}));

    CHECK(has_induced_c4_through(build_family("c4"), 0));
    CHECK_FALSE(has_induced_c4_through(build_family("k4"), 0));
}

TEST_CASE("induced subgraph keeps labels") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.set_label(0, "w");
    g.set_label(1, "x");
    g.set_label(2, "y");
    g.set_label(3, "z");
    Graph sub = induced_subgraph(g, VertexSet::of({1, 2, 3}));
    CHECK(sub.order() == 3);
    CHECK(sub.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(sub.label(0) == "x");
    CHECK(sub.label(2) == "z");
}

TEST_CASE("isomorphism spot checks") {
    CHECK(are_isomorphic(build_family("c4"), build_family("k2*k2")));
    CHECK_FALSE(are_isomorphic(build_family("p4"), build_family("star:3")));
    CHECK_FALSE(are_isomorphic(build_family("doublestar:2,2"),
                               build_family("doublespider:1,1;1,2")));
    // same degree sequence, different structure: backtracking must decide
    CHECK_FALSE(are_isomorphic(build_family("c6"), build_family("2c3")));
    CHECK_FALSE(are_isomorphic(build_family("c6"), build_family("k3+c3")));
    CHECK(are_isomorphic(Graph(0), Graph(0)));
}

TEST_CASE("isomorphism witness is a real embedding") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(8, rng);
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        auto witness = find_isomorphism(g, h);
        REQUIRE(witness.has_value());
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                CHECK(g.has_edge(u, v) ==
                      h.has_edge((*witness)[static_cast<std::size_t>(u)],
                                 (*witness)[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("isomorphism is an equivalence on random graphs") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_graph(static_cast<int>(rng() % 9), rng);
        CHECK(are_isomorphic(g, g));
    }
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(6, rng);
        Graph h = random_graph(6, rng);
        CHECK(are_isomorphic(g, h) == are_isomorphic(h, g));
    }
}

TEST_CASE("isomorphism on refinement-resistant inputs") {
    // vertex-transitive graphs leave color refinement with one class, so
    // the backtracking has to do the work
    std::mt19937 rng(7777);
    Graph q4 = build_family("q4");
    std::vector<int> perm(16);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(are_isomorphic(q4, relabel(q4, perm)));

    CHECK_FALSE(are_isomorphic(build_family("c16"), build_family("2c8")));
    CHECK_FALSE(are_isomorphic(build_family("c16"), build_family("c8*k2")));
    CHECK(are_isomorphic(build_family("c4*k2"), build_family("q3")));
}

TEST_CASE("isomorphism size cap refuses instead of guessing") {
    Graph big(40);
    CHECK_THROWS_AS((void)are_isomorphic(big, big), IsomorphismLimitExceeded);
    CHECK(are_isomorphic(big, big, 64));
    try {
        (void)are_isomorphic(big, big);
    } catch (const IsomorphismLimitExceeded& e) {
        CHECK(e.order == 40);
        CHECK(e.limit == kDefaultIsomorphismLimit);
    }
}
