#pragma once

#include <optional>

#include "bookram/graph.hpp"
#include "bookram/rational.hpp"

namespace bookram {

// Largest r-book: base is an r-clique, pages are the vertices adjacent to all
// of it. size = 0 with no base iff the graph has no r-clique at all.
struct BookMeasure {
    int r = 0;
    int size = 0;
    std::optional<VertexSet> base;
};

struct DegreeSquareBound {
    long long lhs = 0;    // sum of squared degrees
    Rational rhs;         // 2 ((p-1)/p) m n
    bool holds = false;   // violated only when a K_{p+1} is present
};

// Visits every r-clique contained in `within`, in lexicographic order of the
// sorted vertex tuple. f receives the clique and the intersection of its
// members' neighborhoods; returning true stops the walk early.
template <typename F>
bool for_each_clique(const Graph& g, int r, const VertexSet& within, F&& f) {
    VertexSet chosen(g.order());
    auto rec = [&](auto&& self, VertexSet cand, VertexSet common, int left) -> bool {
        if (left == 0) return f(chosen, common);
        if (cand.count() < left) return false;
        std::vector<int> verts = cand.to_vector();
        for (int v : verts) {
            cand.remove(v);
            chosen.add(v);
            if (self(self, cand & g.neighbors(v), common & g.neighbors(v), left - 1)) return true;
            chosen.remove(v);
        }
        return false;
    };
    return rec(rec, within, VertexSet::full(g.order()), r);
}

// Exact number of r-vertex complete subgraphs.
long long count_cliques(const Graph& g, int r);

// True iff g contains K_r; exits early on the first hit.
bool contains_clique(const Graph& g, int r);

long long count_independent_rsets(const Graph& g, int r);

// Maximum page count over all r-clique bases, lexicographically smallest base
// on ties.
BookMeasure book_size(const Graph& g, int r);

// bs^(r)(g) >= q, with early exit.
bool contains_book(const Graph& g, int q, int r);

// lhs = 3 * (number of triangles); rhs = sum over edges uv of |N(u) cap N(v)|.
// These are equal on every graph.
std::pair<long long, long long> triangle_identity(const Graph& g);

// Checks sum d(u)^2 <= 2((p-1)/p) m n, which holds whenever g is K_{p+1}-free;
// a violation certifies a K_{p+1}.
DegreeSquareBound degree_square_bound(const Graph& g, int p);

// Edge count of the balanced complete p-partite graph on n vertices.
long long turan_edge_max(int n, int p);

}  // namespace bookram
