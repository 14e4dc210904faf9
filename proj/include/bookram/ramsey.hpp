#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bookram/graph.hpp"

namespace bookram {

struct SearchConfig {
    int order_cap = 9;
    int threads = 0;  // 0 resolves to BOOKRAM_THREADS or hardware concurrency
};

struct ArrowingVerdict {
    int n = 0, p = 0, q = 0, r = 0;
    bool arrows = false;
    // Lex-least counterexample over the canonicalized search space; present
    // iff arrows is false. K_{p+1}-free with book-free complement, re-verified
    // on construction.
    std::optional<Graph> counterexample;
    long long graphs_examined = 0;  // decision nodes visited by the search
    double elapsed_seconds = 0;     // informational; never part of structured output
};

struct RamseyCertificate {
    int p = 0, q = 0, r = 0;
    std::optional<int> value;  // absent when the search hit its order cap
    std::optional<Graph> witness;
    std::vector<ArrowingVerdict> search_log;
    bool formula_match = false;

    int formula() const { return p * (q + r - 1) + 1; }
};

// The complete p-partite graph with parts of size q+r-1.
Graph build_witness(int p, int q, int r);

// g is K_{p+1}-free and its complement has no B_q^(r).
bool verify_witness(const Graph& g, int p, int q, int r);

// Decides whether every graph of order n contains K_{p+1} or its complement
// contains B_q^(r). Edge-decision DFS over K_n, absent-first, with vertex 0's
// neighborhood canonicalized to a prefix; branches close as soon as the
// partial graph forces either side of the disjunction.
ArrowingVerdict arrows(int n, int p, int q, int r, const SearchConfig& config = {});

// Smallest n that arrows, with the order-(n-1) counterexample as witness.
RamseyCertificate ramsey_number(int p, int q, int r, int n_cap, const SearchConfig& config = {});

std::string serialize_certificate(const RamseyCertificate& cert);

// p disjoint r-sets, independent inside, complete in between.
struct KprEmbedding {
    std::vector<VertexSet> classes;
};

std::optional<KprEmbedding> find_kpr(const Graph& g, int p, int r);

struct PigeonholeOutcome {
    // Exactly one of the two is set: a transversal K_{p+1} through the classes
    // plus an outside vertex, or a complement book (base, pages).
    std::optional<VertexSet> clique;
    std::optional<std::pair<VertexSet, VertexSet>> book;
    long long page_floor = 0;  // ceil((n - p r) / p)
};

// Distributes the vertices outside the embedding: one with a neighbor in
// every class yields a K_{p+1}; otherwise each is parked in a class it does
// not touch and the fullest class becomes a complement book base.
PigeonholeOutcome pigeonhole_book(const Graph& g, int p, int r, const KprEmbedding& emb);

}  // namespace bookram
