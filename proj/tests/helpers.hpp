#pragma once

// Test-side generators and independent brute-force oracles. Everything here
// stays deliberately naive so it cannot share a bug with the library code it
// checks.

#include <algorithm>
#include <numeric>
#include <vector>

#include "bookram/graph.hpp"
#include "bookram/rng.hpp"

namespace testutil {

using bookram::Graph;
using bookram::GraphBuilder;
using bookram::Rng;
using bookram::VertexSet;

inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

// Graph from an edge-subset bitmask over all_pairs(n).
inline Graph graph_from_mask(int n, unsigned long long mask) {
    GraphBuilder b(n);
    auto pairs = all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) b.add_edge(pairs[i].first, pairs[i].second);
    return std::move(b).build();
}

// Every graph of order n (2^C(n,2) of them); keep n <= 6.
template <typename F>
void for_all_graphs(int n, F&& f) {
    auto pairs = all_pairs(n);
    for (unsigned long long mask = 0; mask < (1ull << pairs.size()); ++mask)
        f(graph_from_mask(n, mask));
}

inline Graph random_graph(int n, double edge_prob, Rng& rng) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(edge_prob)) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph cycle(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

// Number of r-cliques by direct combination scan.
inline long long naive_count_cliques(const Graph& g, int r) {
    int n = g.order();
    long long count = 0;
    std::vector<int> pick(r);
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == r) {
            ++count;
            return;
        }
        for (int v = from; v < n; ++v) {
            bool ok = true;
            for (int i = 0; i < depth; ++i)
                if (!g.adjacent(pick[i], v)) ok = false;
            if (!ok) continue;
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Proper p-colorability by scanning all p^n assignments.
inline bool brute_force_colorable(const Graph& g, int p) {
    int n = g.order();
    if (n == 0) return true;
    std::vector<int> color(n, 0);
    for (;;) {
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
            for (int v = u + 1; v < n && proper; ++v)
                if (g.adjacent(u, v) && color[u] == color[v]) proper = false;
        if (proper) return true;
        int i = 0;
        while (i < n && ++color[i] == p) color[i++] = 0;
        if (i == n) return false;
    }
}

// Graph isomorphism by scanning all vertex permutations; fine through n ~ 8.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace testutil
