#include "bookram/stability.hpp"

#include <algorithm>
#include <cmath>

#include "bookram/cliques.hpp"

namespace bookram {

namespace {

constexpr double kThresholdTol = 1e-9;

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace

double stability_cubic(int p, double x) {
    double pd = p;
    double lin = 1.0 + (3.0 / (3 * pd - 1)) * ((pd - 1) / pd) * ((pd - 1) / pd);
    double con = 1.0 / (2 * (3 * pd - 1) * pd);
    return x * x * x + lin * x - con;
}

StabilityConstants compute_c(int p) {
    if (p < 2) throw std::invalid_argument("compute_c: p must be >= 2");
    StabilityConstants out;
    out.p = p;
    double pd = p;
    out.lower = 1.0 / std::pow(2 * pd * (3 * pd + 2), 3);
    out.upper = 1.0 / std::pow(2 * pd * (3 * pd - 1), 3);
    out.rough_approx = std::pow(6.0, -3) * std::pow(pd, -6);

    // The cubic is strictly increasing for x > 0 and its root lies below
    // 1/(2p(3p-1)). Bisect keeping f(lo) <= 0, so the returned root also
    // satisfies the inequality form of the equation in double arithmetic.
    double lo = 0.0, hi = 1.0 / (2 * pd * (3 * pd - 1));
    for (int it = 0; it < 200 && hi - lo > 1e-18; ++it) {
        double mid = 0.5 * (lo + hi);
        if (stability_cubic(p, mid) <= 0)
            lo = mid;
        else
            hi = mid;
    }
    out.c0 = lo;
    out.c = lo * lo * lo;
    if (std::fabs(stability_cubic(p, out.c0)) >= 1e-12)
        throw ContractViolation("compute_c: bisection residual too large");
    if (!(out.lower < out.c && out.c < out.upper))
        throw ContractViolation("compute_c: root escapes its bracket");
    return out;
}

ColoringResult is_p_colorable(const Graph& g, int p, int cap) {
    if (p < 1) throw std::invalid_argument("is_p_colorable: p must be >= 1");
    if (p > 31) throw std::invalid_argument("is_p_colorable: p above 31 not supported");
    int n = g.order();
    ColoringResult out;
    if (n > cap) return out;  // kUnchecked

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // forbidden[v] = bitmask of colors used by colored neighbors of v
    std::vector<unsigned> forbidden(static_cast<std::size_t>(n), 0);
    unsigned all_colors = p == 31 ? 0x7fffffffu : (1u << p) - 1;

    auto pick = [&]() {
        // most saturated first, highest degree to break ties
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = __builtin_popcount(forbidden[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    };

    auto rec = [&](auto&& self, int colored, int used) -> bool {
        if (colored == n) return true;
        int v = pick();
        unsigned avail = all_colors & ~forbidden[v];
        // Allow at most one brand-new color: color classes are interchangeable.
        unsigned limit = used >= 31 ? ~0u : (1u << (used + 1)) - 1;
        unsigned tried = avail & limit;
        while (tried) {
            int c = __builtin_ctz(tried);
            tried &= tried - 1;
            color[v] = c;
            std::vector<int> touched;
            g.neighbors(v).for_each([&](int u) {
                if (color[u] < 0 && !(forbidden[u] & (1u << c))) {
                    forbidden[u] |= 1u << c;
                    touched.push_back(u);
                }
            });
            if (self(self, colored + 1, std::max(used, c + 1))) return true;
            for (int u : touched) forbidden[u] &= ~(1u << c);
            color[v] = -1;
        }
        return false;
    };

    if (n == 0 || rec(rec, 0, 0)) {
        out.verdict = Verdict::kTrue;
        out.coloring = color;
    } else {
        out.verdict = Verdict::kFalse;
    }
    return out;
}

AesVerdict aes_check(const Graph& g, int p, const StabilityOptions& opts) {
    if (p < 2) throw std::invalid_argument("aes_check: p must be >= 2");
    AesVerdict out;
    int n = g.order();
    if (n == 0) return out;
    bool kp1_free = !contains_clique(g, p + 1);
    // delta > (1 - 3/(3p-1)) n  <=>  delta (3p-1) > (3p-4) n, exactly in integers
    bool degree_ok = static_cast<long long>(g.min_degree()) * (3 * p - 1) > static_cast<long long>(3 * p - 4) * n;
    out.premises_hold = kp1_free && degree_ok;
    if (out.premises_hold) {
        out.p_chromatic = is_p_colorable(g, p, opts.coloring_cap).verdict;
        if (out.p_chromatic == Verdict::kFalse)
            throw ContractViolation("aes_check: premises hold but graph is not p-colorable");
    }
    return out;
}

StabilityResult extract_stable_subgraph(const Graph& g, int p, double alpha,
                                        const StabilityOptions& opts) {
    if (p < 2) throw std::invalid_argument("extract_stable_subgraph: p must be >= 2");
    if (!(alpha > 0)) throw std::invalid_argument("extract_stable_subgraph: alpha must be positive");
    int n = g.order();
    if (n == 0) throw std::invalid_argument("extract_stable_subgraph: empty graph");

    StabilityResult out;
    out.alpha = alpha;
    double cbrt_alpha = std::cbrt(alpha);
    out.epsilon = 2 * cbrt_alpha;

    long long m = g.edge_count();

    // Single pass over original degrees: drop u when d(u) < 2m/n - eps n.
    double threshold = 2.0 * static_cast<double>(m) / n - out.epsilon * n;
    out.deleted = VertexSet(n);
    for (int u = 0; u < n; ++u)
        if (g.degree(u) < threshold - kThresholdTol) out.deleted.add(u);
    VertexSet kept = g.vertex_set() - out.deleted;
    out.kept_graph = induced(g, kept);

    // m >= ((p-1)/(2p) - alpha) n^2, evaluated exactly: alpha is a dyadic
    // rational, so the boundary case is decided without rounding.
    Rational rhs = (make_rational(p - 1, 2 * p) - rational_from_double(alpha)) * Rational(n) * Rational(n);
    out.m_inequality_met = Rational(m) >= rhs;
    out.alpha_within_c = alpha <= compute_c(p).c;
    out.clique_free = !contains_clique(g, p + 1);
    out.hypothesis_met = out.m_inequality_met && out.alpha_within_c && out.clique_free;

    int kept_n = out.kept_graph.order();
    out.size_bound_met = kept_n >= (1 - 2 * cbrt_alpha) * n - kThresholdTol;
    out.degree_bound_met =
        out.kept_graph.min_degree() >= (1 - 1.0 / p - 4 * cbrt_alpha) * n - kThresholdTol;
    out.p_chromatic = is_p_colorable(out.kept_graph, p, opts.coloring_cap).verdict;

    if (out.hypothesis_met) {
        if (!out.size_bound_met)
            throw ContractViolation("extract_stable_subgraph: size bound failed under hypothesis");
        if (!out.degree_bound_met)
            throw ContractViolation("extract_stable_subgraph: degree bound failed under hypothesis");
        if (out.p_chromatic == Verdict::kFalse)
            throw ContractViolation("extract_stable_subgraph: kept graph not p-chromatic under hypothesis");
    }
    return out;
}

}  // namespace bookram
