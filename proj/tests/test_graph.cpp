#include "bookram/graph.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace bookram;

TEST_CASE("graph6 hand-checked encodings") {
    // 'B' encodes order 3; K3 packs edge bits 111 -> group 111000 -> 'w'
    Graph k3 = Graph::complete(3);
    CHECK(serialize_graph6(k3) == "Bw");
    CHECK(parse_graph6("Bw") == k3);

    Graph e3(3);
    CHECK(serialize_graph6(e3) == "B?");
    CHECK(parse_graph6("B?") == e3);

    CHECK(parse_graph6(">>graph6<<Bw") == k3);
}

TEST_CASE("graph6 round-trip on the full small catalog") {
    for (int n = 0; n <= 6; ++n)
        testutil::for_all_graphs(n, [&](const Graph& g) {
            CHECK(parse_graph6(serialize_graph6(g)) == g);
        });
}

TEST_CASE("graph6 round-trip on random graphs up to order 62") {
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng.below(62));
        Graph g = testutil::random_graph(n, rng.next_double(), rng);
        std::string text = serialize_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(serialize_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("graph6 long-form order encoding") {
    Graph g(100);
    GraphBuilder b(std::move(g));
    b.add_edge(0, 99);
    b.add_edge(17, 43);
    Graph built = std::move(b).build();
    std::string text = serialize_graph6(built);
    CHECK(text[0] == 126);
    CHECK(parse_graph6(text) == built);
}

TEST_CASE("graph6 malformed inputs carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6ParseError);      // missing edge bytes
    CHECK_THROWS_AS(parse_graph6("Bww"), Graph6ParseError);    // trailing bytes
    CHECK_THROWS_AS(parse_graph6("B\x1f"), Graph6ParseError);  // byte below 63
    CHECK_THROWS_AS(parse_graph6("@w"), Graph6ParseError);     // order 1 with an edge byte

    // order 2: one edge bit, so the low 5 bits of the single group must be 0
    CHECK(parse_graph6("A_").edge_count() == 1);
    CHECK_THROWS_AS(parse_graph6("AW"), Graph6ParseError);  // nonzero padding
    try {
        parse_graph6("AW");
    } catch (const Graph6ParseError& e) {
        CHECK(e.byte_offset == 1);
    }
}

TEST_CASE("complement is an involution and splits the edge count") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.below(20));
        Graph g = testutil::random_graph(n, 0.4, rng);
        Graph gc = complement(g);
        CHECK(complement(gc) == g);
        CHECK(g.edge_count() + gc.edge_count() == static_cast<long long>(n) * (n - 1) / 2);
    }
    CHECK(complement(Graph::complete(6)) == Graph(6));
}

TEST_CASE("complement of a complete multipartite graph is a disjoint clique union") {
    // p = 2, q = 2, r = 2: complement of K_{3,3} is two triangles
    Graph w = Graph::complete_multipartite(std::vector<int>{3, 3});
    Graph wc = complement(w);
    CHECK(wc.edge_count() == 6);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) {
            CHECK(wc.adjacent(u, v));
            CHECK(wc.adjacent(u + 3, v + 3));
            CHECK(!wc.adjacent(u, v + 3));
        }
}

TEST_CASE("induced subgraphs") {
    Graph k5 = Graph::complete(5);
    CHECK(induced(k5, VertexSet::full(5)) == k5);
    CHECK(induced(k5, VertexSet::of(5, {0, 2, 4})) == Graph::complete(3));

    Graph k33 = Graph::complete_multipartite(std::vector<int>{3, 3});
    CHECK(induced(k33, VertexSet::of(6, {0, 1, 2})) == Graph(3));

    // relabeling preserves adjacency through the sorted original indices
    Graph c5 = testutil::cycle(5);
    Graph path = induced(c5, VertexSet::of(5, {0, 1, 2}));
    CHECK(path.adjacent(0, 1));
    CHECK(path.adjacent(1, 2));
    CHECK(!path.adjacent(0, 2));
}

TEST_CASE("induced degree matches neighborhood intersection") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.below(14));
        Graph g = testutil::random_graph(n, 0.5, rng);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng.bernoulli(0.6)) s.add(v);
        if (s.empty()) continue;
        Graph sub = induced(g, s);
        std::vector<int> keep = s.to_vector();
        for (std::size_t i = 0; i < keep.size(); ++i)
            CHECK(sub.degree(static_cast<int>(i)) == g.neighbors(keep[i]).intersection_count(s));
    }
}

TEST_CASE("common_neighbors basics") {
    Graph c5 = testutil::cycle(5);
    CHECK(common_neighbors(c5, VertexSet::of(5, {1, 2})).empty());

    Graph k4 = Graph::complete(4);
    CHECK(common_neighbors(k4, VertexSet::of(4, {0, 1})) == VertexSet::of(4, {2, 3}));

    Graph k33 = Graph::complete_multipartite(std::vector<int>{3, 3});
    CHECK(common_neighbors(k33, VertexSet::of(6, {0, 3})).empty());

    CHECK_THROWS_AS(common_neighbors(k4, VertexSet(4)), std::invalid_argument);
}

TEST_CASE("common_neighbors agrees with a per-vertex loop") {
    testutil::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(15));
        Graph g = testutil::random_graph(n, 0.5, rng);
        int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        VertexSet got = common_neighbors(g, VertexSet::of(n, {u, v}));
        for (int w = 0; w < n; ++w) {
            bool expect = w != u && w != v && g.adjacent(w, u) && g.adjacent(w, v);
            CHECK(got.contains(w) == expect);
        }
    }
}

TEST_CASE("turan factory shapes") {
    CHECK(Graph::turan(6, 2) == Graph::complete_multipartite(std::vector<int>{3, 3}));
    CHECK(Graph::turan(7, 3).edge_count() == 16);
    CHECK(Graph::turan(5, 7) == Graph::complete(5));
}
