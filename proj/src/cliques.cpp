#include "bookram/cliques.hpp"

namespace bookram {

namespace {

// Counts k-cliques inside `cand`. Candidates shrink as vertices are consumed
// in ascending order, so each clique is counted once.
long long count_rec(const Graph& g, VertexSet cand, int k) {
    if (k == 0) return 1;
    if (cand.count() < k) return 0;
    if (k == 1) return cand.count();
    long long total = 0;
    std::vector<int> verts = cand.to_vector();
    for (int v : verts) {
        cand.remove(v);
        total += count_rec(g, cand & g.neighbors(v), k - 1);
    }
    return total;
}

bool exists_rec(const Graph& g, VertexSet cand, int k) {
    if (k == 0) return true;
    if (cand.count() < k) return false;
    if (k == 1) return true;
    std::vector<int> verts = cand.to_vector();
    for (int v : verts) {
        cand.remove(v);
        if (exists_rec(g, cand & g.neighbors(v), k - 1)) return true;
    }
    return false;
}

}  // namespace

long long count_cliques(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("count_cliques: r must be >= 1");
    return count_rec(g, VertexSet::full(g.order()), r);
}

bool contains_clique(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("contains_clique: r must be >= 1");
    return exists_rec(g, VertexSet::full(g.order()), r);
}

long long count_independent_rsets(const Graph& g, int r) {
    return count_cliques(complement(g), r);
}

BookMeasure book_size(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("book_size: r must be >= 1");
    BookMeasure best{r, 0, std::nullopt};
    for_each_clique(g, r, g.vertex_set(), [&](const VertexSet& base, const VertexSet& common) {
        int pages = (common - base).count();
        if (!best.base || pages > best.size) {
            best.size = pages;
            best.base = base;
        }
        return false;
    });
    return best;
}

bool contains_book(const Graph& g, int q, int r) {
    if (q < 1) throw std::invalid_argument("contains_book: q must be >= 1");
    if (r < 1) throw std::invalid_argument("contains_book: r must be >= 1");
    return for_each_clique(g, r, g.vertex_set(), [&](const VertexSet& base, const VertexSet& common) {
        return (common - base).count() >= q;
    });
}

std::pair<long long, long long> triangle_identity(const Graph& g) {
    long long lhs = 3 * count_cliques(g, 3);
    long long rhs = 0;
    for (int u = 0; u < g.order(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) rhs += g.neighbors(u).intersection_count(g.neighbors(v));
        });
    return {lhs, rhs};
}

DegreeSquareBound degree_square_bound(const Graph& g, int p) {
    if (p < 2) throw std::invalid_argument("degree_square_bound: p must be >= 2");
    DegreeSquareBound out;
    for (int u = 0; u < g.order(); ++u) {
        long long d = g.degree(u);
        out.lhs += d * d;
    }
    long long m = g.edge_count(), n = g.order();
    out.rhs = make_rational(2 * (p - 1) * m * n, p);
    out.holds = Rational(out.lhs) <= out.rhs;
    return out;
}

long long turan_edge_max(int n, int p) {
    if (n < 0 || p < 1) throw std::invalid_argument("turan_edge_max: need n >= 0, p >= 1");
    long long hi = n / p + (n % p ? 1 : 0);
    long long lo = n / p;
    long long big = n % p, small = p - big;
    long long sum_sq = big * hi * hi + small * lo * lo;
    return (static_cast<long long>(n) * n - sum_sq) / 2;
}

}  // namespace bookram
