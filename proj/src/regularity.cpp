#include "bookram/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bookram/cliques.hpp"
#include "bookram/rng.hpp"
#include "bookram/stability.hpp"

namespace bookram {

namespace {

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

long long cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
    long long e = 0;
    a.for_each([&](int u) { e += g.neighbors(u).intersection_count(b); });
    return e;
}

// Smallest admissible subset size: the least integer >= eps * set_size.
long long threshold_size(double eps, int set_size) {
    return rational_ceil(rational_from_double(eps) * Rational(set_size));
}

// |e_xy * |A||B| - e_ab * |X||Y|| >= ceil(eps |X||Y| |A||B|) decides
// |d(X,Y) - d(A,B)| >= eps exactly for integer left-hand sides.
long long deviation_threshold(double eps, long long sub_den, long long full_den) {
    return rational_ceil(rational_from_double(eps) * Rational(sub_den) * Rational(full_den));
}

}  // namespace

void Partition::validate() const {
    int n = exceptional.universe();
    if (parts.empty()) throw std::invalid_argument("Partition: no parts");
    int size0 = parts.front().count();
    VertexSet seen = exceptional;
    long long total = exceptional.count();
    for (const auto& part : parts) {
        if (part.universe() != n) throw std::invalid_argument("Partition: universe mismatch");
        if (part.count() != size0) throw std::invalid_argument("Partition: parts not equal size");
        if (part.empty()) throw std::invalid_argument("Partition: empty part");
        if (seen.intersects(part)) throw std::invalid_argument("Partition: parts overlap");
        seen |= part;
        total += part.count();
    }
    if (total != n || seen != VertexSet::full(n))
        throw std::invalid_argument("Partition: classes do not cover the vertex set");
}

Partition parse_partition_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::optional<std::vector<int>> exceptional;
    std::vector<std::vector<int>> parts;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto read_indices = [&] {
            std::vector<int> out;
            int v;
            while (ls >> v) out.push_back(v);
            if (!ls.eof())
                throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                            ": expected vertex indices");
            return out;
        };
        if (word == "n") {
            int v;
            if (!(ls >> v) || v < 0)
                throw std::invalid_argument("partition line " + std::to_string(lineno) + ": bad order");
            n = v;
        } else if (word == "exceptional") {
            exceptional = read_indices();
        } else if (word == "part") {
            parts.push_back(read_indices());
        } else {
            throw std::invalid_argument("partition line " + std::to_string(lineno) +
                                        ": unknown directive '" + word + "'");
        }
    }
    if (!n) throw std::invalid_argument("partition: missing 'n' directive");
    if (!exceptional) throw std::invalid_argument("partition: missing 'exceptional' directive");

    Partition out;
    out.exceptional = VertexSet::of(*n, *exceptional);
    for (const auto& p : parts) out.parts.push_back(VertexSet::of(*n, p));
    out.validate();
    return out;
}

std::string serialize_partition_text(const Partition& part) {
    std::ostringstream out;
    out << "n " << part.exceptional.universe() << "\n";
    out << "exceptional";
    part.exceptional.for_each([&](int v) { out << ' ' << v; });
    out << "\n";
    for (const auto& p : part.parts) {
        out << "part";
        p.for_each([&](int v) { out << ' ' << v; });
        out << "\n";
    }
    return out.str();
}

SrlParams select_srl_parameters(int p, int r, double xi, double c_pr) {
    if (p < 2 || r < 2) throw std::invalid_argument("select_srl_parameters: need p, r >= 2");
    if (!(xi > 0) || !(c_pr > 0))
        throw std::invalid_argument("select_srl_parameters: need xi > 0 and c_pr > 0");

    SrlParams out;
    out.p = p;
    out.r = r;
    out.xi = xi;
    out.c_pr = c_pr;
    out.delta = std::min(xi * xi * xi / 32, compute_c(p).c / 4);
    double grind = r / c_pr + 2 * r + 1;
    out.d = std::min(std::pow(out.delta / 2, r + 1) / (grind + 2 * p),
                     (p * out.delta / (1 + p * out.delta)) / grind);
    out.epsilon = std::min(out.delta, std::pow(out.d, p) / (2 * (p + 1)));

    if (!(0 < 2 * out.epsilon && 2 * out.epsilon < out.d && out.d < out.delta && out.delta < 1))
        throw ContractViolation("select_srl_parameters: ordering 0 < 2eps < d < delta < 1 failed");
    if (!(std::pow(out.d - out.epsilon, p) > (p + 2) * out.epsilon))
        throw ContractViolation("select_srl_parameters: (d-eps)^p > (p+2) eps failed");
    return out;
}

Rational pair_density(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("pair_density: empty side");
    if (a.intersects(b)) throw std::invalid_argument("pair_density: sides overlap");
    return make_rational(cross_edges(g, a, b),
                         static_cast<long long>(a.count()) * b.count());
}

RegularityVerdict eps_regular_exact(const Graph& g, const VertexSet& a, const VertexSet& b,
                                    double eps, int cap) {
    if (a.empty() || b.empty()) throw std::invalid_argument("eps_regular_exact: empty side");
    if (a.intersects(b)) throw std::invalid_argument("eps_regular_exact: sides overlap");
    if (!(eps > 0)) throw std::invalid_argument("eps_regular_exact: eps must be positive");
    if (cap > 30) throw std::invalid_argument("eps_regular_exact: cap above 30 not supported");
    int na = a.count(), nb = b.count();
    if (na > cap || nb > cap)
        throw std::invalid_argument("eps_regular_exact: side of size " +
                                    std::to_string(std::max(na, nb)) + " exceeds cap " +
                                    std::to_string(cap) + "; use eps_regular_refute");

    RegularityVerdict out;
    out.mode = RegMode::kExact;
    long long sx = threshold_size(eps, na), sy = threshold_size(eps, nb);
    if (sx > na || sy > nb) return out;  // no admissible subset pair, vacuously regular

    std::vector<int> av = a.to_vector(), bv = b.to_vector();
    // adjacency of each A vertex restricted to B, as an nb-bit mask
    std::vector<std::uint32_t> adj(av.size(), 0);
    long long e_ab = 0;
    for (std::size_t i = 0; i < av.size(); ++i) {
        for (std::size_t j = 0; j < bv.size(); ++j)
            if (g.adjacent(av[i], bv[j])) adj[i] |= 1u << j;
        e_ab += __builtin_popcount(adj[i]);
    }

    long long full_den = static_cast<long long>(na) * nb;
    long long sub_den = sx * sy;
    long long dev_min = deviation_threshold(eps, sub_den, full_den);

    auto first_mask = [](long long k) { return (k == 0) ? 0u : ((1u << k) - 1); };
    auto next_mask = [](std::uint32_t v) {  // Gosper: next mask with equal popcount
        std::uint32_t t = v | (v - 1);
        return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctz(v) + 1));
    };

    std::vector<int> cnt(av.size(), 0);
    std::uint32_t y_end = 1u << nb;
    for (std::uint32_t ymask = first_mask(sy); ymask < y_end; ymask = next_mask(ymask)) {
        for (std::size_t i = 0; i < av.size(); ++i)
            cnt[i] = __builtin_popcount(adj[i] & ymask);
        std::uint32_t x_end = 1u << na;
        for (std::uint32_t xmask = first_mask(sx); xmask < x_end; xmask = next_mask(xmask)) {
            long long e_xy = 0;
            for (std::uint32_t w = xmask; w; w &= w - 1) e_xy += cnt[__builtin_ctz(w)];
            long long dev = e_xy * full_den - e_ab * sub_den;
            if (dev < 0) dev = -dev;
            if (dev >= dev_min) {
                VertexSet x(g.order()), y(g.order());
                for (std::uint32_t w = xmask; w; w &= w - 1) x.add(av[__builtin_ctz(w)]);
                for (std::uint32_t w = ymask; w; w &= w - 1) y.add(bv[__builtin_ctz(w)]);
                out.regular = false;
                out.witness = {std::move(x), std::move(y)};
                return out;
            }
        }
    }
    return out;
}

namespace {

// Exact deviation check for arbitrary subset sizes, used by the refuter.
bool violates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& x,
              const VertexSet& y, double eps) {
    long long full_den = static_cast<long long>(a.count()) * b.count();
    long long sub_den = static_cast<long long>(x.count()) * y.count();
    long long e_ab = cross_edges(g, a, b), e_xy = cross_edges(g, x, y);
    long long dev = e_xy * full_den - e_ab * sub_den;
    if (dev < 0) dev = -dev;
    return dev >= deviation_threshold(eps, sub_den, full_den);
}

// Keep the `keep` members of `from` with the most (or fewest) neighbors in
// `against`; ties break toward lower index.
VertexSet extreme_subset(const Graph& g, const VertexSet& from, const VertexSet& against,
                         long long keep, bool most) {
    std::vector<std::pair<int, int>> scored;  // (count, vertex)
    from.for_each([&](int v) { scored.emplace_back(g.neighbors(v).intersection_count(against), v); });
    std::stable_sort(scored.begin(), scored.end(), [&](const auto& l, const auto& r) {
        return most ? l.first > r.first : l.first < r.first;
    });
    VertexSet out(from.universe());
    for (long long i = 0; i < keep; ++i) out.add(scored[static_cast<std::size_t>(i)].second);
    return out;
}

}  // namespace

RegularityVerdict eps_regular_refute(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     double eps, int trials, std::uint64_t seed) {
    if (a.empty() || b.empty()) throw std::invalid_argument("eps_regular_refute: empty side");
    if (a.intersects(b)) throw std::invalid_argument("eps_regular_refute: sides overlap");
    if (!(eps > 0)) throw std::invalid_argument("eps_regular_refute: eps must be positive");
    if (trials < 1) throw std::invalid_argument("eps_regular_refute: trials must be positive");

    RegularityVerdict out;
    out.mode = RegMode::kRandomized;
    int na = a.count(), nb = b.count();
    long long sx = threshold_size(eps, na), sy = threshold_size(eps, nb);
    if (sx > na || sy > nb) return out;

    std::vector<int> av = a.to_vector(), bv = b.to_vector();
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
        VertexSet x0(g.order()), y0(g.order());
        for (int i : rng.sample_subset(na, static_cast<int>(sx))) x0.add(av[static_cast<std::size_t>(i)]);
        for (int j : rng.sample_subset(nb, static_cast<int>(sy))) y0.add(bv[static_cast<std::size_t>(j)]);

        for (bool most : {true, false}) {
            VertexSet x = x0, y = y0;
            for (int round = 0; round < 3; ++round) {
                x = extreme_subset(g, a, y, sx, most);
                if (violates(g, a, b, x, y, eps)) {
                    out.regular = false;
                    out.witness = {x, y};
                    return out;
                }
                y = extreme_subset(g, b, x, sy, most);
                if (violates(g, a, b, x, y, eps)) {
                    out.regular = false;
                    out.witness = {x, y};
                    return out;
                }
            }
        }
    }
    return out;
}

ClusterGraphs classify_partition(const Graph& g, const Partition& part, const SrlParams& params,
                                 RegMode mode, const ClassifyOptions& opts) {
    part.validate();
    if (part.exceptional.universe() != g.order())
        throw std::invalid_argument("classify_partition: partition is for a different order");

    int k = part.k();
    if (mode == RegMode::kExact && part.parts.front().count() > opts.exact_cap)
        throw std::invalid_argument("classify_partition: part size " +
                                    std::to_string(part.parts.front().count()) +
                                    " exceeds the exact cap " + std::to_string(opts.exact_cap) +
                                    "; use randomized mode");
    GraphBuilder irr(k), lo(k), mid(k), hi(k);
    Rational d_r = rational_from_double(params.d);
    Rational hi_r = Rational(1) - rational_from_double(params.delta);

    std::uint64_t pair_index = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j, ++pair_index) {
            RegularityVerdict v;
            if (mode == RegMode::kExact) {
                v = eps_regular_exact(g, part.parts[static_cast<std::size_t>(i)],
                                      part.parts[static_cast<std::size_t>(j)], params.epsilon,
                                      opts.exact_cap);
            } else {
                v = eps_regular_refute(g, part.parts[static_cast<std::size_t>(i)],
                                       part.parts[static_cast<std::size_t>(j)], params.epsilon,
                                       opts.trials, opts.seed + pair_index);
            }
            if (!v.regular) {
                irr.add_edge(i, j);
                continue;
            }
            Rational dens = pair_density(g, part.parts[static_cast<std::size_t>(i)],
                                         part.parts[static_cast<std::size_t>(j)]);
            if (dens <= d_r)
                lo.add_edge(i, j);
            else if (dens <= hi_r)
                mid.add_edge(i, j);
            else
                hi.add_edge(i, j);
        }
    }

    ClusterGraphs out{k, std::move(irr).build(), std::move(lo).build(), std::move(mid).build(),
                      std::move(hi).build()};
    long long total = out.h_irr.edge_count() + out.h_lo.edge_count() + out.h_mid.edge_count() +
                      out.h_hi.edge_count();
    if (total != static_cast<long long>(k) * (k - 1) / 2)
        throw ContractViolation("classify_partition: cluster graphs do not partition K_k");
    return out;
}

BadRsetCount bad_rset_count(const Graph& g, const VertexSet& a, const VertexSet& b,
                            const VertexSet& y, double eps, double d, int r) {
    if (r < 1) throw std::invalid_argument("bad_rset_count: r must be >= 1");
    if (a.intersects(b)) throw std::invalid_argument("bad_rset_count: A and B overlap");
    if (!y.is_subset_of(b)) throw std::invalid_argument("bad_rset_count: Y must lie inside B");

    BadRsetCount out;
    int asize = a.count();
    out.bound = eps * r * std::pow(asize, r);
    out.premise_ok = std::pow(d - eps, r - 1) * y.count() > eps * b.count();

    double cutoff = std::pow(d - eps, r) * y.count();
    std::vector<int> av = a.to_vector();
    // all r-subsets of A, tracking the running neighborhood intersection
    auto rec = [&](auto&& self, std::size_t from, int left, const VertexSet& common) -> void {
        if (left == 0) {
            if (common.intersection_count(y) <= cutoff + 1e-12) ++out.bad;
            return;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= av.size(); ++i)
            self(self, i + 1, left - 1, common & g.neighbors(av[i]));
    };
    rec(rec, 0, r, VertexSet::full(g.order()));
    return out;
}

DleBound counting_bound_dle(const Graph& g, const VertexSet& a, std::span<const VertexSet> bs,
                            double eps, double d, int r) {
    if (r < 1) throw std::invalid_argument("counting_bound_dle: r must be >= 1");
    int asize = a.count();
    VertexSet seen = a, others(a.universe());
    for (const auto& b : bs) {
        if (b.count() != asize)
            throw std::invalid_argument("counting_bound_dle: parts must match |A|");
        if (seen.intersects(b)) throw std::invalid_argument("counting_bound_dle: parts overlap");
        seen |= b;
        others |= b;
    }

    DleBound out;
    out.premise_weak = std::pow(d - eps, r - 2) > eps;
    out.premise_strong = std::pow(d - eps, r - 1) > eps;

    for_each_clique(g, r, a, [&](const VertexSet&, const VertexSet& common) {
        ++out.rcliques_in_a;
        out.actual += common.intersection_count(others);
        return false;
    });
    double t = static_cast<double>(bs.size());
    out.bound = t * asize * (static_cast<double>(out.rcliques_in_a) - eps * r * std::pow(asize, r)) *
                std::pow(d - eps, r);
    return out;
}

KeyLemmaOutcome key_lemma_check(const Graph& g, std::span<const VertexSet> parts, double eps,
                                double d, int cap) {
    if (parts.size() < 2) throw std::invalid_argument("key_lemma_check: need at least 2 parts");
    int p = static_cast<int>(parts.size()) - 1;
    int size0 = parts.front().count();

    KeyLemmaOutcome out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].count() != size0)
            throw std::invalid_argument("key_lemma_check: parts are not equal size");
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersects(parts[j]))
                throw std::invalid_argument("key_lemma_check: parts overlap");
    }

    if (!(eps <= std::pow(d - eps, p) / (p + 2)))
        out.failures.push_back("threshold eps <= (d-eps)^p/(p+2) fails");
    Rational d_r = rational_from_double(d);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            auto pair_name = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (!eps_regular_exact(g, parts[i], parts[j], eps, cap).regular)
                out.failures.push_back("pair " + pair_name + " is not eps-regular");
            else if (pair_density(g, parts[i], parts[j]) < d_r)
                out.failures.push_back("pair " + pair_name + " has density below d");
        }
    }
    if (!out.failures.empty()) return out;
    out.premises_hold = true;

    // Transversal clique: one vertex per part, restricting candidates as we go.
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t idx, const VertexSet& allowed) -> bool {
        if (idx == parts.size()) return true;
        std::vector<int> options = (parts[idx] & allowed).to_vector();
        for (int v : options) {
            pick.push_back(v);
            if (self(self, idx + 1, allowed & g.neighbors(v))) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0, VertexSet::full(g.order())))
        throw ContractViolation("key_lemma_check: premises hold but no transversal clique exists");
    out.witness = pick;
    return out;
}

double cluster_book_bound(const ClusterGraphs& cg, const SrlParams& params,
                          double part_size_fraction) {
    double k2 = static_cast<double>(cg.k) * cg.k;
    double lo_factor = std::max(0.0, 1 - params.d - params.epsilon);
    double mid_factor = std::max(0.0, params.delta - params.epsilon);
    double within = 2 * static_cast<double>(cg.h_lo.edge_count()) / k2 * std::pow(lo_factor, params.r) +
                    2 * static_cast<double>(cg.h_mid.edge_count()) / k2 * std::pow(mid_factor, params.r);
    return part_size_fraction * (1 - params.epsilon * params.r / params.c_pr) * within;
}

namespace {

// r(K_a, K_b) where known exactly; 0 when unknown.
int known_classical_ramsey(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a <= 1) return a;
    if (a == 2) return b;
    static constexpr struct {
        int a, b, value;
    } kTable[] = {{3, 3, 6},  {3, 4, 9},  {3, 5, 14}, {3, 6, 18}, {3, 7, 23},
                  {3, 8, 28}, {3, 9, 36}, {4, 4, 18}, {4, 5, 25}};
    for (const auto& row : kTable)
        if (row.a == a && row.b == b) return row.value;
    return 0;
}

}  // namespace

Rational independent_rset_density(int p, int r, int n, DensityMode mode, long long budget,
                                  std::uint64_t seed) {
    if (p < 2 || r < 1 || n < 1) throw std::invalid_argument("independent_rset_density: bad parameters");
    int floor_n = known_classical_ramsey(p + 1, r);
    if (floor_n > 0 && n < floor_n)
        throw std::invalid_argument("independent_rset_density: order below the Ramsey floor " +
                                    std::to_string(floor_n));

    BigInt denom = BigInt(1);
    for (int i = 0; i < r; ++i) denom *= n;

    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);

    auto creates_clique = [&](const GraphBuilder& b, int u, int v) {
        // would adding uv complete a K_{p+1}? look for K_{p-1} among common neighbors
        VertexSet cand = b.neighbors(u) & b.neighbors(v);
        return for_each_clique(b.view(), p - 1, cand,
                               [](const VertexSet&, const VertexSet&) { return true; });
    };

    long long best = -1;
    if (mode == DensityMode::kExhaustive) {
        if (n > 8)
            throw std::invalid_argument("independent_rset_density: exhaustive mode capped at order 8");
        GraphBuilder b(n);
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == all_pairs.size()) {
                long long count = count_cliques(complement(b.view()), r);
                if (best < 0 || count < best) best = count;
                return;
            }
            auto [u, v] = all_pairs[idx];
            self(self, idx + 1);  // edge absent
            if (!creates_clique(b, u, v)) {
                b.add_edge(u, v);
                self(self, idx + 1);
                b.remove_edge(u, v);
            }
        };
        rec(rec, 0);
    } else {
        if (budget < 1) throw std::invalid_argument("independent_rset_density: budget must be positive");
        for (long long t = 0; t < budget; ++t) {
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
            auto order = all_pairs;
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);
            GraphBuilder b(n);
            for (auto [u, v] : order)
                if (!creates_clique(b, u, v)) b.add_edge(u, v);
            long long count = count_cliques(complement(b.view()), r);
            if (best < 0 || count < best) best = count;
        }
    }
    return Rational(BigInt(best), denom);
}

}  // namespace bookram
