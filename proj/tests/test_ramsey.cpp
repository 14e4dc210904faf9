#include "bookram/ramsey.hpp"

#include "bookram/cliques.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bookram;

TEST_CASE("build_witness shapes") {
    CHECK(build_witness(2, 2, 2) == Graph::complete_multipartite(std::vector<int>{3, 3}));
    CHECK(testutil::isomorphic(build_witness(2, 1, 2), testutil::cycle(4)));  // K_{2,2}
    Graph w = build_witness(3, 2, 2);
    CHECK(w.order() == 9);
    CHECK(w == Graph::complete_multipartite(std::vector<int>{3, 3, 3}));
}

TEST_CASE("verify_witness battery") {
    for (int p : {2, 3})
        for (int r : {2, 3})
            for (int q = 1; q <= 5; ++q) {
                Graph w = build_witness(p, q, r);
                CHECK(verify_witness(w, p, q, r));
                CHECK(book_size(complement(w), r).size == q - 1);
            }
    CHECK(!verify_witness(Graph::complete(7), 2, 2, 2));
}

TEST_CASE("arrows at the classical r(3,3) boundary") {
    // B_1^(2) is the triangle, so this is r(K_3, K_3) = 6
    ArrowingVerdict five = arrows(5, 2, 1, 2);
    CHECK(!five.arrows);
    REQUIRE(five.counterexample.has_value());
    CHECK(testutil::isomorphic(*five.counterexample, testutil::cycle(5)));

    ArrowingVerdict six = arrows(6, 2, 1, 2);
    CHECK(six.arrows);
    CHECK(!six.counterexample.has_value());
}

TEST_CASE("arrows produces verified counterexamples below the Ramsey value") {
    ArrowingVerdict v = arrows(6, 2, 2, 2);
    CHECK(!v.arrows);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->order() == 6);
    CHECK(!contains_clique(*v.counterexample, 3));
    CHECK(!contains_book(complement(*v.counterexample), 2, 2));
}

TEST_CASE("arrows is deterministic including under different thread caps") {
    SearchConfig serial;
    serial.threads = 1;
    SearchConfig wide;
    wide.threads = 8;
    ArrowingVerdict a = arrows(6, 2, 2, 2, serial);
    ArrowingVerdict b = arrows(6, 2, 2, 2, wide);
    ArrowingVerdict c = arrows(6, 2, 2, 2, wide);
    CHECK(a.arrows == b.arrows);
    CHECK(a.graphs_examined == b.graphs_examined);
    CHECK(*a.counterexample == *b.counterexample);
    CHECK(*b.counterexample == *c.counterexample);
    CHECK(b.graphs_examined == c.graphs_examined);
}

TEST_CASE("arrows rejects orders above the cap") {
    CHECK_THROWS_AS(arrows(10, 2, 2, 2), std::invalid_argument);
}

TEST_CASE("ramsey_number for the classical case") {
    RamseyCertificate cert = ramsey_number(2, 1, 2, 8);
    REQUIRE(cert.value.has_value());
    CHECK(*cert.value == 6);
    CHECK(cert.formula() == 5);
    CHECK(!cert.formula_match);  // small q sits above the formula
    REQUIRE(cert.witness.has_value());
    CHECK(testutil::isomorphic(*cert.witness, testutil::cycle(5)));

    // verdicts are monotone along the log
    bool seen_true = false;
    for (const auto& verdict : cert.search_log) {
        if (seen_true) CHECK(verdict.arrows);
        if (verdict.arrows) seen_true = true;
    }

    std::string text = serialize_certificate(cert);
    CHECK(text.find("schema bookram.ramsey/1") == 0);
    CHECK(text.find("value 6") != std::string::npos);
    CHECK(text == serialize_certificate(ramsey_number(2, 1, 2, 8)));
}

TEST_CASE("ramsey_number capped searches yield a partial log") {
    // cap below the certified value: every examined order must refuse to arrow
    RamseyCertificate low = ramsey_number(2, 1, 2, 5);
    CHECK(!low.value.has_value());
    CHECK(!low.search_log.empty());
    for (const auto& verdict : low.search_log) CHECK(!verdict.arrows);
    CHECK(serialize_certificate(low).find("status capped") != std::string::npos);

    // cap below even the construction order: the log still carries a verified
    // counterexample at the cap
    RamseyCertificate tiny = ramsey_number(2, 4, 2, 9);
    CHECK(!tiny.value.has_value());
    REQUIRE(tiny.search_log.size() == 1);
    CHECK(tiny.search_log[0].n == 9);
    CHECK(!tiny.search_log[0].arrows);
    REQUIRE(tiny.search_log[0].counterexample.has_value());
    CHECK(!contains_clique(*tiny.search_log[0].counterexample, 3));
    CHECK(!contains_book(complement(*tiny.search_log[0].counterexample), 4, 2));
}

TEST_CASE("find_kpr") {
    Graph k33 = Graph::complete_multipartite(std::vector<int>{3, 3});
    auto emb = find_kpr(k33, 2, 3);
    REQUIRE(emb.has_value());
    CHECK(emb->classes[0] == VertexSet::of(6, {0, 1, 2}));
    CHECK(emb->classes[1] == VertexSet::of(6, {3, 4, 5}));

    CHECK(!find_kpr(testutil::cycle(5), 2, 2).has_value());

    auto three = find_kpr(Graph::complete_multipartite(std::vector<int>{3, 3, 3}), 3, 3);
    REQUIRE(three.has_value());
    CHECK(three->classes.size() == 3);
}

TEST_CASE("pigeonhole_book on witness graphs") {
    Graph k33 = Graph::complete_multipartite(std::vector<int>{3, 3});
    KprEmbedding emb{{VertexSet::of(6, {0, 1}), VertexSet::of(6, {3, 4})}};
    PigeonholeOutcome out = pigeonhole_book(k33, 2, 2, emb);
    REQUIRE(out.book.has_value());
    CHECK(out.page_floor == 1);
    const auto& [base, pages] = *out.book;
    CHECK(pages.count() >= out.page_floor);
    // every page avoids the base entirely in g
    pages.for_each([&](int u) { CHECK(!k33.neighbors(u).intersects(base)); });

    Graph k44 = Graph::complete_multipartite(std::vector<int>{4, 4});
    KprEmbedding emb44{{VertexSet::of(8, {0, 1}), VertexSet::of(8, {4, 5})}};
    PigeonholeOutcome out44 = pigeonhole_book(k44, 2, 2, emb44);
    REQUIRE(out44.book.has_value());
    CHECK(out44.page_floor == 2);
    CHECK(out44.book->second.count() >= 2);
}

TEST_CASE("pigeonhole_book surfaces a transversal clique") {
    // C_4 plus an apex touching one vertex of each class
    GraphBuilder b(5);
    b.add_edge(0, 2);
    b.add_edge(0, 3);
    b.add_edge(1, 2);
    b.add_edge(1, 3);
    b.add_edge(4, 0);
    b.add_edge(4, 2);
    Graph g = std::move(b).build();
    KprEmbedding emb{{VertexSet::of(5, {0, 1}), VertexSet::of(5, {2, 3})}};
    PigeonholeOutcome out = pigeonhole_book(g, 2, 2, emb);
    REQUIRE(out.clique.has_value());
    CHECK(out.clique->count() == 3);
    std::vector<int> clique = out.clique->to_vector();
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            CHECK(g.adjacent(clique[i], clique[j]));
}

TEST_CASE("pigeonhole_book validates its embedding") {
    Graph k33 = Graph::complete_multipartite(std::vector<int>{3, 3});
    // classes overlap
    CHECK_THROWS_AS(
        pigeonhole_book(k33, 2, 2, KprEmbedding{{VertexSet::of(6, {0, 1}), VertexSet::of(6, {1, 3})}}),
        std::invalid_argument);
    // class not independent
    GraphBuilder b(k33);
    b.add_edge(0, 1);
    Graph bad = std::move(b).build();
    CHECK_THROWS_AS(
        pigeonhole_book(bad, 2, 2, KprEmbedding{{VertexSet::of(6, {0, 1}), VertexSet::of(6, {3, 4})}}),
        std::invalid_argument);
    // cross edges missing
    CHECK_THROWS_AS(
        pigeonhole_book(Graph(6), 2, 2, KprEmbedding{{VertexSet::of(6, {0, 1}), VertexSet::of(6, {3, 4})}}),
        std::invalid_argument);
}
