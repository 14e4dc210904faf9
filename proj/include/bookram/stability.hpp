#pragma once

#include <optional>
#include <vector>

#include "bookram/graph.hpp"
#include "bookram/rational.hpp"

namespace bookram {

enum class Verdict { kTrue, kFalse, kUnchecked };

// c(p) = c0^3 where c0 is the unique positive root of
//   x^3 + (1 + 3/(3p-1) ((p-1)/p)^2) x - 1/(2(3p-1)p) = 0.
struct StabilityConstants {
    int p = 0;
    double c0 = 0;
    double c = 0;
    double lower = 0;         // 1 / (2p(3p+2))^3
    double upper = 0;         // 1 / (2p(3p-1))^3
    double rough_approx = 0;  // 6^-3 p^-6
};

StabilityConstants compute_c(int p);

// Residual of the defining cubic at x, for the given p.
double stability_cubic(int p, double x);

struct StabilityOptions {
    int coloring_cap = 40;
};

struct StabilityResult {
    double alpha = 0;
    double epsilon = 0;  // 2 alpha^(1/3)
    VertexSet deleted;   // vertices with original degree < 2m/n - eps*n
    Graph kept_graph;

    // Hypothesis components and their conjunction.
    bool m_inequality_met = false;  // m >= ((p-1)/(2p) - alpha) n^2, exact rational
    bool alpha_within_c = false;    // alpha <= c(p)
    bool clique_free = false;       // no K_{p+1}
    bool hypothesis_met = false;

    // Conclusion checks; guaranteed whenever hypothesis_met.
    bool size_bound_met = false;    // |V(G0)| >= (1 - 2 alpha^(1/3)) n
    bool degree_bound_met = false;  // delta(G0) >= (1 - 1/p - 4 alpha^(1/3)) n
    Verdict p_chromatic = Verdict::kUnchecked;
};

// One deletion pass at eps = 2 alpha^(1/3), thresholding on degrees in the
// input graph. When the full hypothesis holds, the conclusion triple is
// asserted; a failure there throws (it would falsify this implementation).
StabilityResult extract_stable_subgraph(const Graph& g, int p, double alpha,
                                        const StabilityOptions& opts = {});

struct AesVerdict {
    bool premises_hold = false;  // K_{p+1}-free and delta(g) > (1 - 3/(3p-1)) n, strict
    Verdict p_chromatic = Verdict::kUnchecked;
};

AesVerdict aes_check(const Graph& g, int p, const StabilityOptions& opts = {});

struct ColoringResult {
    Verdict verdict = Verdict::kUnchecked;
    std::vector<int> coloring;  // vertex -> color in [0, p), filled when kTrue
};

// Exact p-colorability by branch and bound with saturation-degree ordering.
// Orders above the cap report kUnchecked rather than guessing.
ColoringResult is_p_colorable(const Graph& g, int p, int cap = 40);

}  // namespace bookram
