#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bookram/graph.hpp"
#include "bookram/rational.hpp"

namespace bookram {

// An SRL-style partition: an exceptional class plus k equal-size parts that
// together cover the vertex set.
struct Partition {
    VertexSet exceptional;
    std::vector<VertexSet> parts;

    int k() const { return static_cast<int>(parts.size()); }
    void validate() const;  // throws on a malformed partition
};

// Text exchange format, one directive per line:
//   n <order>
//   exceptional <v> <v> ...   (indices optional; line itself required)
//   part <v> <v> ...          (k lines, one per part)
// '#' starts a comment; blank lines are skipped.
Partition parse_partition_text(const std::string& text);
std::string serialize_partition_text(const Partition& part);

// Derived parameters: delta = min{xi^3/32, c(p)/4},
// d = min{(delta/2)^{r+1} (r/c_pr + 2r + 1 + 2p)^-1, (p delta/(1+p delta)) (r/c_pr + 2r + 1)^-1},
// eps = min{delta, d^p / (2(p+1))}.
struct SrlParams {
    int p = 0, r = 0;
    double xi = 0;
    double c_pr = 0;
    double delta = 0;
    double d = 0;
    double epsilon = 0;
};

SrlParams select_srl_parameters(int p, int r, double xi, double c_pr);

// e(A,B) / (|A||B|) for nonempty disjoint sides, as an exact rational.
Rational pair_density(const Graph& g, const VertexSet& a, const VertexSet& b);

enum class RegMode { kExact, kRandomized };

struct RegularityVerdict {
    bool regular = true;
    // Violating pair: |X| >= eps|A|, |Y| >= eps|B|, |d(X,Y) - d(A,B)| >= eps.
    std::optional<std::pair<VertexSet, VertexSet>> witness;
    RegMode mode = RegMode::kExact;
};

// Exact epsilon-regularity decision. Only subsets of size exactly
// ceil(eps|A|) x ceil(eps|B|) are scanned: averaging a violating pair down
// one vertex at a time preserves a deviation of at least eps, so a minimal
// violating pair always has threshold size. All density comparisons are done
// in exact integer arithmetic.
RegularityVerdict eps_regular_exact(const Graph& g, const VertexSet& a, const VertexSet& b,
                                    double eps, int cap = 14);

// One-sided randomized check for parts above the exact cap. Each trial starts
// from a random threshold-size pair and alternates a few rounds of keeping
// the most extreme rows/columns, in both density directions. Any witness
// returned is re-verified exactly, so a certified-regular pair is never
// refuted. Same seed, same verdict.
RegularityVerdict eps_regular_refute(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     double eps, int trials, std::uint64_t seed);

// The four cluster graphs on [k]: pair (i,j) lands in exactly one of
// irregular / low (d <= d_param) / mid (d_param < d <= 1-delta) / high.
struct ClusterGraphs {
    int k = 0;
    Graph h_irr, h_lo, h_mid, h_hi;
};

struct ClassifyOptions {
    int exact_cap = 14;
    int trials = 2000;
    std::uint64_t seed = 1;
};

ClusterGraphs classify_partition(const Graph& g, const Partition& part, const SrlParams& params,
                                 RegMode mode, const ClassifyOptions& opts = {});

struct BadRsetCount {
    long long bad = 0;       // r-subsets R of A with |(cap N(u)) cap Y| <= (d-eps)^r |Y|
    double bound = 0;        // eps r |A|^r
    bool premise_ok = false; // (d-eps)^{r-1} |Y| > eps |B|
};

BadRsetCount bad_rset_count(const Graph& g, const VertexSet& a, const VertexSet& b,
                            const VertexSet& y, double eps, double d, int r);

struct DleBound {
    long long actual = 0;         // (r+1)-cliques with r vertices in A, one in union of B_i
    double bound = 0;             // t |A| (m - eps r |A|^r) (d-eps)^r
    long long rcliques_in_a = 0;  // m
    bool premise_weak = false;    // (d-eps)^{r-2} > eps, as stated
    bool premise_strong = false;  // (d-eps)^{r-1} > eps, what the proof uses
};

DleBound counting_bound_dle(const Graph& g, const VertexSet& a, std::span<const VertexSet> bs,
                            double eps, double d, int r);

struct KeyLemmaOutcome {
    bool premises_hold = false;
    std::vector<std::string> failures;  // which premises failed, empty when none
    std::optional<std::vector<int>> witness;  // transversal clique, one vertex per part
};

// Simplified key-lemma check on p+1 equal parts: all pairs must be exact
// eps-regular with density >= d and eps <= (d-eps)^p/(p+2); then a transversal
// K_{p+1} is found (its absence would be a contract violation).
KeyLemmaOutcome key_lemma_check(const Graph& g, std::span<const VertexSet> parts, double eps,
                                double d, int cap = 14);

// Lower bound on bs^(r)(complement)/n from cluster statistics:
//   psf (1 - eps r / c_pr) [ (2 e_lo / k^2)(1 - d - eps)^r + (2 e_mid / k^2)(delta - eps)^r ]
// where psf stands in for k|V_i|/n; pass 1 - eps for the SRL guarantee.
double cluster_book_bound(const ClusterGraphs& cg, const SrlParams& params,
                          double part_size_fraction);

enum class DensityMode { kExhaustive, kRandom };

// Minimum of (independent r-sets)/n^r over searched K_{p+1}-free graphs of
// order n: every such graph at exhaustive mode, or `budget` greedily
// maximal samples at random mode. An order-n empirical figure, not the
// existential constant itself.
Rational independent_rset_density(int p, int r, int n, DensityMode mode, long long budget,
                                  std::uint64_t seed);

}  // namespace bookram
