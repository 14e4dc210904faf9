#include "bookram/lower_bound.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bookram/cliques.hpp"
#include "bookram/parallel.hpp"
#include "bookram/rng.hpp"

namespace bookram {

namespace {

constexpr long long kMaxSampleOrder = 4096;
constexpr long long kMaxTrialOrder = 256;
constexpr long long kMaxTrials = 10'000'000;

double log_binomial(double n, double k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

LbParams lb_parameters(int m, int k, int r) {
    if (m < 3) throw std::invalid_argument("lb_parameters: m must be >= 3");
    if (k < 1 || r < 2) throw std::invalid_argument("lb_parameters: need k >= 1 and r >= 2");

    LbParams out;
    out.m = m;
    out.k = k;
    out.r = r;
    out.C = 2.0 * (k + r - 1);
    out.c = 1.0 / (3.0 * std::pow(out.C, r));
    out.edge_prob_complement = out.C / m * std::log(m);
    if (out.edge_prob_complement >= 1) {
        // smallest m with (C/m) log m < 1
        int floor_m = m;
        while (out.C / floor_m * std::log(floor_m) >= 1) ++floor_m;
        throw std::invalid_argument("lb_parameters: m too small for C = " + std::to_string(out.C) +
                                    "; need m >= " + std::to_string(floor_m));
    }
    out.N = static_cast<long long>(
        std::floor(out.c * std::pow(m, k + r) / std::pow(std::log(m), r)));
    if (out.N < 1) throw std::invalid_argument("lb_parameters: derived N is below 1");
    out.book_pages = 1;
    for (int i = 0; i < k; ++i) {
        if (out.book_pages > (1LL << 50) / m)
            throw std::invalid_argument("lb_parameters: m^k does not fit the page counter");
        out.book_pages *= m;
    }
    return out;
}

double chernoff_tail(long long n, double prob, double M) {
    if (!(prob >= 0) || !(prob <= 1)) throw std::invalid_argument("chernoff_tail: prob outside [0,1]");
    double mean = static_cast<double>(n) * prob;
    if (M < mean) throw std::invalid_argument("chernoff_tail: requires M >= n prob");
    if (M == 0) return 1;  // M = mean = 0: P(X >= 0) = 1 and the bound is 1
    return std::exp(M * (std::log(mean) + 1 - std::log(M)));
}

KmProbabilityBound bound_km_probability(const LbParams& params) {
    KmProbabilityBound out;
    double N = static_cast<double>(params.N), m = params.m;
    double p = params.edge_prob_complement;
    if (params.N < params.m) {
        out.value = 0;
    } else {
        double log_value = log_binomial(N, m) + m * (m - 1) / 2.0 * std::log1p(-p);
        out.value = std::exp(log_value);
    }
    double log_weaker = m * (std::log(N) + 1 + p / 2 - (params.k + params.r - 1) * std::log(m) -
                             std::log(m));
    out.weaker = std::exp(log_weaker);
    return out;
}

BookProbabilityBound bound_book_probability(const LbParams& params) {
    BookProbabilityBound out;
    double N = static_cast<double>(params.N), r = params.r;
    double p = params.edge_prob_complement;
    double pages = static_cast<double>(params.book_pages);
    out.last_factor = (N - r) * std::pow(p, r) * std::exp(1.0) / pages;
    if (params.N <= params.r || out.last_factor <= 0) {
        out.value = 0;
        out.last_factor = std::max(out.last_factor, 0.0);
        return out;
    }
    double log_value = log_binomial(N, r) + r * (r - 1) / 2.0 * std::log(p) +
                       pages * std::log(out.last_factor);
    out.value = std::exp(log_value);
    return out;
}

Graph sample_random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0 || n > kMaxSampleOrder) throw std::invalid_argument("sample_random_graph: bad order");
    if (!(edge_prob >= 0) || !(edge_prob <= 1))
        throw std::invalid_argument("sample_random_graph: probability outside [0,1]");
    Rng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(edge_prob)) b.add_edge(u, v);
    return std::move(b).build();
}

TrialStats monte_carlo_witness(const LbParams& params, int q_target, long long trials,
                               std::uint64_t seed, int threads) {
    if (trials < 1 || trials > kMaxTrials)
        throw std::invalid_argument("monte_carlo_witness: trials outside [1, " +
                                    std::to_string(kMaxTrials) + "]");
    if (params.N > kMaxTrialOrder)
        throw std::invalid_argument("monte_carlo_witness: N = " + std::to_string(params.N) +
                                    " exceeds the per-trial cap " + std::to_string(kMaxTrialOrder));
    if (q_target < 1) q_target = static_cast<int>(params.book_pages);

    struct ChunkResult {
        long long clique_hits = 0, book_hits = 0, witnesses = 0;
        long long first_witness = -1;
    };

    int workers = resolve_thread_cap(threads);
    int chunks = static_cast<int>(std::min<long long>(trials, workers));
    long long per = trials / chunks, extra = trials % chunks;
    double keep_prob = 1 - params.edge_prob_complement;

    auto run_chunk = [&](int idx) {
        long long lo = idx * per + std::min<long long>(idx, extra);
        long long hi = lo + per + (idx < extra ? 1 : 0);
        ChunkResult res;
        for (long long t = lo; t < hi; ++t) {
            Graph g = sample_random_graph(static_cast<int>(params.N), keep_prob,
                                          Rng::stream(seed, static_cast<std::uint64_t>(t)).next());
            bool clique = contains_clique(g, params.m);
            bool book = contains_book(complement(g), q_target, params.r);
            if (clique) ++res.clique_hits;
            if (book) ++res.book_hits;
            if (!clique && !book) {
                ++res.witnesses;
                if (res.first_witness < 0) res.first_witness = t;
            }
        }
        return res;
    };
    auto results = run_indexed<ChunkResult>(chunks, workers, run_chunk);

    TrialStats out;
    out.trials = trials;
    out.seed = seed;
    long long first = -1;
    for (const auto& res : results) {
        out.clique_hits += res.clique_hits;
        out.book_hits += res.book_hits;
        out.witnesses += res.witnesses;
        if (first < 0 && res.first_witness >= 0) first = res.first_witness;
    }
    if (first >= 0) {
        Graph g = sample_random_graph(static_cast<int>(params.N), keep_prob,
                                      Rng::stream(seed, static_cast<std::uint64_t>(first)).next());
        // independent re-verification of the retained witness
        if (count_cliques(g, params.m) != 0 || book_size(complement(g), params.r).size >= q_target)
            throw std::logic_error("monte_carlo_witness: witness failed re-verification");
        out.best_witness = std::move(g);
    }
    return out;
}

}  // namespace bookram
