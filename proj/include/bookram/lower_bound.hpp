#pragma once

#include <cstdint>
#include <optional>

#include "bookram/graph.hpp"

namespace bookram {

// Derived constants of the random lower-bound construction. The random model
// is G(N, 1 - p) where p is edge_prob_complement; the symbols p, m, k are
// overloaded elsewhere in this domain, so they keep distinct names here.
struct LbParams {
    int m = 0;  // clique order
    int k = 0;  // book-size exponent: target book has m^k pages
    int r = 0;  // base clique order
    double C = 0;                     // 2 (k + r - 1)
    double c = 0;                     // 1 / (3 C^r)
    long long N = 0;                  // floor(c m^{k+r} / (log m)^r)
    double edge_prob_complement = 0;  // (C / m) log m
    long long book_pages = 0;         // m^k
};

// Rejects any parameterization whose complement edge probability reaches 1.
LbParams lb_parameters(int m, int k, int r);

// (n prob e / M)^M, the binomial upper tail bound, valid for M >= n prob.
double chernoff_tail(long long n, double prob, double M);

struct KmProbabilityBound {
    double value = 0;   // binom(N, m) (1-p)^{m(m-1)/2}, log-space evaluation
    double weaker = 0;  // (N e^{1+p/2} m^{-(k+r-1)} / m)^m
};

KmProbabilityBound bound_km_probability(const LbParams& params);

struct BookProbabilityBound {
    double value = 0;        // binom(N, r) p^{r(r-1)/2} ((N-r) p^r e / m^k)^{m^k}
    double last_factor = 0;  // (N-r) p^r e / m^k; at most e/3 by the choice of c
};

BookProbabilityBound bound_book_probability(const LbParams& params);

// Each pair present independently with the given probability; deterministic
// in (n, edge_prob, seed).
Graph sample_random_graph(int n, double edge_prob, std::uint64_t seed);

struct TrialStats {
    long long trials = 0;
    long long clique_hits = 0;  // trials whose graph contains K_m
    long long book_hits = 0;    // trials whose complement contains the target book
    long long witnesses = 0;    // trials with neither
    std::optional<Graph> best_witness;  // lowest-index witnessing trial
    std::uint64_t seed = 0;
};

// Samples G(N, 1 - edge_prob_complement) repeatedly; a trial avoiding both
// the K_m and the complement book is a concrete witness that
// r(K_m, B_{q_target}^{(r)}) > N. Both events are evaluated on every trial.
TrialStats monte_carlo_witness(const LbParams& params, int q_target, long long trials,
                               std::uint64_t seed, int threads = 0);

}  // namespace bookram
