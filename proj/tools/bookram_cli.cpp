#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bookram/cliques.hpp"
#include "bookram/graph.hpp"
#include "bookram/lower_bound.hpp"
#include "bookram/ramsey.hpp"
#include "bookram/regularity.hpp"
#include "bookram/stability.hpp"

namespace {

using namespace bookram;

// Shortest round-trip decimal form, locale-independent.
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(const Rational& r) {
    std::ostringstream out;
    out << numerator(r) << "/" << denominator(r);
    return out.str();
}

const char* yesno(bool b) { return b ? "true" : "false"; }

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::kTrue: return "true";
        case Verdict::kFalse: return "false";
        default: return "unchecked";
    }
}

std::string join(const std::vector<int>& vs) {
    if (vs.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

std::vector<Graph> load_graphs(const std::string& arg) {
    std::vector<std::string> lines;
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
        if (lines.empty()) throw std::invalid_argument("no graphs in file: " + arg);
    } else {
        lines.push_back(arg);
    }
    std::vector<Graph> out;
    for (const auto& line : lines) out.push_back(parse_graph6(line));
    return out;
}

Graph load_one_graph(const std::string& arg) {
    auto gs = load_graphs(arg);
    if (gs.size() != 1) throw std::invalid_argument("expected exactly one graph, got " +
                                                    std::to_string(gs.size()));
    return gs.front();
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

struct Common {
    std::string format = "records";
    int threads = 0;
    bool human() const { return format == "human"; }
};

std::uint64_t ensure_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    return std::random_device{}();
}

int cmd_constants(int p, const Common& common) {
    StabilityConstants sc = compute_c(p);
    if (common.human()) {
        std::printf("stability constants for p = %d\n", p);
        std::printf("  c0 (cubic root)     %s\n", fmt(sc.c0).c_str());
        std::printf("  c = c0^3            %s\n", fmt(sc.c).c_str());
        std::printf("  lower 1/(2p(3p+2))^3  %s\n", fmt(sc.lower).c_str());
        std::printf("  upper 1/(2p(3p-1))^3  %s\n", fmt(sc.upper).c_str());
        std::printf("  rough 6^-3 p^-6     %s\n", fmt(sc.rough_approx).c_str());
        return 0;
    }
    std::printf("schema bookram.constants/1\n");
    std::printf("p %d\n", p);
    std::printf("c0 %s\n", fmt(sc.c0).c_str());
    std::printf("c %s\n", fmt(sc.c).c_str());
    std::printf("lower %s\n", fmt(sc.lower).c_str());
    std::printf("upper %s\n", fmt(sc.upper).c_str());
    std::printf("rough_approx %s\n", fmt(sc.rough_approx).c_str());
    std::printf("cubic_residual %s\n", fmt(stability_cubic(p, sc.c0)).c_str());
    return 0;
}

int cmd_books(const std::string& graph_arg, int r, std::optional<int> q, const Common& common) {
    auto graphs = load_graphs(graph_arg);
    bool all_contain = true;
    if (!common.human()) std::printf("schema bookram.books/1\nr %d\n", r);
    for (const auto& g : graphs) {
        BookMeasure bm = book_size(g, r);
        std::string base = bm.base ? join(bm.base->to_vector()) : "-";
        if (common.human()) {
            std::printf("%s: order %d, bs^(%d) = %d, base [%s]\n", serialize_graph6(g).c_str(),
                        g.order(), r, bm.size, base.c_str());
        } else {
            std::printf("graph %s\n", serialize_graph6(g).c_str());
            std::printf("order %d\n", g.order());
            std::printf("bs %d\n", bm.size);
            std::printf("base %s\n", base.c_str());
        }
        if (q) {
            bool has = bm.size >= *q;
            all_contain = all_contain && has;
            if (common.human())
                std::printf("  contains B_%d^(%d): %s\n", *q, r, yesno(has));
            else
                std::printf("q %d\ncontains %s\n", *q, yesno(has));
        }
    }
    return (q && !all_contain) ? 1 : 0;
}

int cmd_witness(int p, int q, int r, const Common& common) {
    Graph w = build_witness(p, q, r);
    bool ok = verify_witness(w, p, q, r);
    BookMeasure bm = book_size(complement(w), r);
    if (common.human()) {
        std::printf("K_%d(%d): order %d, graph6 %s\n", p, q + r - 1, w.order(),
                    serialize_graph6(w).c_str());
        std::printf("K_%d-free and complement B_%d^(%d)-free: %s\n", p + 1, q, r, yesno(ok));
        std::printf("complement book size: %d\n", bm.size);
    } else {
        std::printf("schema bookram.witness/1\n");
        std::printf("p %d\nq %d\nr %d\n", p, q, r);
        std::printf("order %d\n", w.order());
        std::printf("graph %s\n", serialize_graph6(w).c_str());
        std::printf("verified %s\n", yesno(ok));
        std::printf("complement_bs %d\n", bm.size);
    }
    return ok ? 0 : 1;
}

int cmd_ramsey(int p, int q, int r, int cap, const Common& common) {
    SearchConfig cfg;
    cfg.threads = common.threads;
    RamseyCertificate cert = ramsey_number(p, q, r, cap, cfg);
    if (common.human()) {
        if (cert.value)
            std::printf("r(K_%d, B_%d^(%d)) = %d (formula %d, %s)\n", p + 1, q, r, *cert.value,
                        cert.formula(), cert.formula_match ? "match" : "MISMATCH");
        else
            std::printf("r(K_%d, B_%d^(%d)) > %d (search capped)\n", p + 1, q, r, cap);
        for (const auto& verdict : cert.search_log)
            std::printf("  n=%d arrows=%s examined=%lld%s\n", verdict.n, yesno(verdict.arrows),
                        verdict.graphs_examined,
                        verdict.counterexample
                            ? (" counterexample=" + serialize_graph6(*verdict.counterexample)).c_str()
                            : "");
        if (cert.witness) std::printf("  witness %s\n", serialize_graph6(*cert.witness).c_str());
    } else {
        std::fputs(serialize_certificate(cert).c_str(), stdout);
    }
    return cert.value ? 0 : 1;
}

int cmd_stability(const std::string& graph_arg, int p, double alpha, int coloring_cap,
                  const Common& common) {
    Graph g = load_one_graph(graph_arg);
    StabilityOptions opts;
    opts.coloring_cap = coloring_cap;
    StabilityResult res = extract_stable_subgraph(g, p, alpha, opts);
    if (common.human()) {
        std::printf("order %d, edges %lld, p = %d, alpha = %s, eps = %s\n", g.order(),
                    g.edge_count(), p, fmt(alpha).c_str(), fmt(res.epsilon).c_str());
        std::printf("deleted %d vertices [%s]\n", res.deleted.count(),
                    join(res.deleted.to_vector()).c_str());
        std::printf("hypothesis: m-inequality %s, alpha <= c(p) %s, K_%d-free %s -> %s\n",
                    yesno(res.m_inequality_met), yesno(res.alpha_within_c), p + 1,
                    yesno(res.clique_free), yesno(res.hypothesis_met));
        std::printf("kept order %d, size bound %s, degree bound %s, %d-chromatic %s\n",
                    res.kept_graph.order(), yesno(res.size_bound_met), yesno(res.degree_bound_met),
                    p, verdict_str(res.p_chromatic));
        return 0;
    }
    std::printf("schema bookram.stability/1\n");
    std::printf("graph %s\n", serialize_graph6(g).c_str());
    std::printf("order %d\nedges %lld\np %d\n", g.order(), g.edge_count(), p);
    std::printf("alpha %s\n", fmt(alpha).c_str());
    std::printf("epsilon %s\n", fmt(res.epsilon).c_str());
    std::printf("coloring_cap %d\n", coloring_cap);
    std::printf("deleted %s\n", join(res.deleted.to_vector()).c_str());
    std::printf("kept_order %d\n", res.kept_graph.order());
    std::printf("kept %s\n", serialize_graph6(res.kept_graph).c_str());
    std::printf("m_inequality_met %s\n", yesno(res.m_inequality_met));
    std::printf("alpha_within_c %s\n", yesno(res.alpha_within_c));
    std::printf("clique_free %s\n", yesno(res.clique_free));
    std::printf("hypothesis_met %s\n", yesno(res.hypothesis_met));
    std::printf("size_bound_met %s\n", yesno(res.size_bound_met));
    std::printf("degree_bound_met %s\n", yesno(res.degree_bound_met));
    std::printf("p_chromatic %s\n", verdict_str(res.p_chromatic));
    return 0;
}

int cmd_regularity_pair(const std::string& graph_arg, const std::string& a_arg,
                        const std::string& b_arg, double eps, const std::string& mode, int trials,
                        std::optional<std::uint64_t> seed_opt, int cap, const Common& common) {
    Graph g = load_one_graph(graph_arg);
    VertexSet a = VertexSet::of(g.order(), parse_index_list(a_arg));
    VertexSet b = VertexSet::of(g.order(), parse_index_list(b_arg));
    std::uint64_t seed = ensure_seed(seed_opt);
    RegularityVerdict v = mode == "exact" ? eps_regular_exact(g, a, b, eps, cap)
                                          : eps_regular_refute(g, a, b, eps, trials, seed);
    Rational dens = pair_density(g, a, b);
    if (common.human()) {
        std::printf("pair density %s, eps = %s, mode %s\n", fmt(dens).c_str(), fmt(eps).c_str(),
                    mode.c_str());
        if (v.regular)
            std::printf("regular%s\n", v.mode == RegMode::kRandomized ? " (not refuted)" : "");
        else
            std::printf("irregular: X=[%s] Y=[%s]\n", join(v.witness->first.to_vector()).c_str(),
                        join(v.witness->second.to_vector()).c_str());
    } else {
        std::printf("schema bookram.regularity.pair/1\n");
        std::printf("graph %s\n", serialize_graph6(g).c_str());
        std::printf("a %s\n", join(a.to_vector()).c_str());
        std::printf("b %s\n", join(b.to_vector()).c_str());
        std::printf("eps %s\n", fmt(eps).c_str());
        std::printf("mode %s\n", mode.c_str());
        if (mode == "refute") std::printf("trials %d\nseed %" PRIu64 "\n", trials, seed);
        std::printf("density %s\n", fmt(dens).c_str());
        std::printf("regular %s\n", yesno(v.regular));
        if (v.witness) {
            std::printf("witness_x %s\n", join(v.witness->first.to_vector()).c_str());
            std::printf("witness_y %s\n", join(v.witness->second.to_vector()).c_str());
        }
    }
    return v.regular ? 0 : 1;
}

int cmd_regularity_partition(const std::string& graph_arg, const std::string& partition_path,
                             int p, int r, double xi, double c_pr, const std::string& mode,
                             int trials, std::optional<std::uint64_t> seed_opt, int cap,
                             const Common& common) {
    Graph g = load_one_graph(graph_arg);
    std::ifstream in(partition_path);
    if (!in) throw std::invalid_argument("cannot open partition file: " + partition_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    Partition part = parse_partition_text(buffer.str());

    SrlParams params = select_srl_parameters(p, r, xi, c_pr);
    ClassifyOptions opts;
    opts.exact_cap = cap;
    opts.trials = trials;
    opts.seed = ensure_seed(seed_opt);
    ClusterGraphs cg = classify_partition(g, part, params,
                                          mode == "exact" ? RegMode::kExact : RegMode::kRandomized,
                                          opts);
    double bound = cluster_book_bound(cg, params, 1 - params.epsilon);
    if (common.human()) {
        std::printf("k = %d parts of size %d, delta = %s, d = %s, eps = %s\n", cg.k,
                    part.parts.front().count(), fmt(params.delta).c_str(), fmt(params.d).c_str(),
                    fmt(params.epsilon).c_str());
        std::printf("pairs: irr %lld, lo %lld, mid %lld, hi %lld\n", cg.h_irr.edge_count(),
                    cg.h_lo.edge_count(), cg.h_mid.edge_count(), cg.h_hi.edge_count());
        std::printf("complement book-size bound: bs/n >= %s\n", fmt(bound).c_str());
    } else {
        std::printf("schema bookram.regularity.partition/1\n");
        std::printf("graph %s\n", serialize_graph6(g).c_str());
        std::printf("p %d\nr %d\n", p, r);
        std::printf("xi %s\nc_pr %s\n", fmt(xi).c_str(), fmt(c_pr).c_str());
        std::printf("delta %s\nd %s\neps %s\n", fmt(params.delta).c_str(), fmt(params.d).c_str(),
                    fmt(params.epsilon).c_str());
        std::printf("mode %s\n", mode.c_str());
        if (mode == "refute") std::printf("trials %d\nseed %" PRIu64 "\n", trials, opts.seed);
        std::printf("k %d\n", cg.k);
        std::printf("e_irr %lld\ne_lo %lld\ne_mid %lld\ne_hi %lld\n", cg.h_irr.edge_count(),
                    cg.h_lo.edge_count(), cg.h_mid.edge_count(), cg.h_hi.edge_count());
        std::printf("book_bound %s\n", fmt(bound).c_str());
    }
    return 0;
}

int cmd_lower_bound(int m, int k, int r, std::optional<int> q, long long trials,
                    std::optional<std::uint64_t> seed_opt, const Common& common) {
    LbParams params = lb_parameters(m, k, r);
    KmProbabilityBound km = bound_km_probability(params);
    BookProbabilityBound book = bound_book_probability(params);
    std::uint64_t seed = ensure_seed(seed_opt);
    int q_target = q ? *q : static_cast<int>(params.book_pages);
    TrialStats stats = monte_carlo_witness(params, q_target, trials, seed, common.threads);

    if (common.human()) {
        std::printf("m=%d k=%d r=%d: C=%s c=%s N=%lld p=%s, book target %d pages\n", m, k, r,
                    fmt(params.C).c_str(), fmt(params.c).c_str(), params.N,
                    fmt(params.edge_prob_complement).c_str(), q_target);
        std::printf("P(K_%d) <= %s (weaker closed form %s)\n", m, fmt(km.value).c_str(),
                    fmt(km.weaker).c_str());
        std::printf("P(book) <= %s, last factor %s (e/3 = %s)\n", fmt(book.value).c_str(),
                    fmt(book.last_factor).c_str(), fmt(std::exp(1.0) / 3).c_str());
        std::printf("%lld trials (seed %" PRIu64 "): %lld clique hits, %lld book hits, %lld witnesses\n",
                    stats.trials, stats.seed, stats.clique_hits, stats.book_hits, stats.witnesses);
        if (stats.best_witness)
            std::printf("witness for r(K_%d, B_%d^(%d)) > %lld: %s\n", m, q_target, r, params.N,
                        serialize_graph6(*stats.best_witness).c_str());
        return 0;
    }
    std::printf("schema bookram.lower_bound/1\n");
    std::printf("m %d\nk %d\nr %d\n", m, k, r);
    std::printf("C %s\nc %s\n", fmt(params.C).c_str(), fmt(params.c).c_str());
    std::printf("N %lld\n", params.N);
    std::printf("edge_prob_complement %s\n", fmt(params.edge_prob_complement).c_str());
    std::printf("q_target %d\n", q_target);
    std::printf("km_bound %s\n", fmt(km.value).c_str());
    std::printf("km_bound_weaker %s\n", fmt(km.weaker).c_str());
    std::printf("book_bound %s\n", fmt(book.value).c_str());
    std::printf("last_factor %s\n", fmt(book.last_factor).c_str());
    std::printf("trials %lld\n", stats.trials);
    std::printf("seed %" PRIu64 "\n", stats.seed);
    std::printf("clique_hits %lld\n", stats.clique_hits);
    std::printf("book_hits %lld\n", stats.book_hits);
    std::printf("witnesses %lld\n", stats.witnesses);
    if (stats.best_witness)
        std::printf("best_witness %s\n", serialize_graph6(*stats.best_witness).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized-book Ramsey toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "output mode")
        ->check(CLI::IsMember({"records", "human"}))
        ->capture_default_str();
    app.add_option("--threads", common.threads, "thread cap (0 = auto, env BOOKRAM_THREADS)");

    // constants
    int c_p = 2;
    auto* constants = app.add_subcommand("constants", "stability constants c(p) and bounds");
    constants->add_option("--p", c_p, "clique parameter")->required()->check(CLI::Range(2, 31));

    // books
    std::string b_graph;
    int b_r = 2;
    std::optional<int> b_q;
    auto* books = app.add_subcommand("books", "book sizes bs^(r) of graphs");
    books->add_option("--graph", b_graph, "graph6 string or file")->required();
    books->add_option("--r", b_r, "base clique order")->required()->check(CLI::PositiveNumber);
    books->add_option("--q", b_q, "page threshold to test");

    // witness
    int w_p = 2, w_q = 2, w_r = 2;
    auto* witness = app.add_subcommand("witness", "extremal witness K_p(q+r-1) and its check");
    witness->add_option("--p", w_p)->required()->check(CLI::Range(2, 31));
    witness->add_option("--q", w_q)->required()->check(CLI::PositiveNumber);
    witness->add_option("--r", w_r)->required()->check(CLI::PositiveNumber);

    // ramsey
    int rm_p = 2, rm_q = 2, rm_r = 2, rm_cap = 9;
    auto* ramsey = app.add_subcommand("ramsey", "certify r(K_{p+1}, B_q^(r)) exhaustively");
    ramsey->add_option("--p", rm_p)->required()->check(CLI::Range(1, 8));
    ramsey->add_option("--q", rm_q)->required()->check(CLI::PositiveNumber);
    ramsey->add_option("--r", rm_r)->required()->check(CLI::PositiveNumber);
    ramsey->add_option("--cap", rm_cap, "largest order to search");

    // stability
    std::string s_graph;
    int s_p = 2, s_cap = 40;
    double s_alpha = 0;
    auto* stability = app.add_subcommand("stability", "low-degree deletion extraction");
    stability->add_option("--graph", s_graph)->required();
    stability->add_option("--p", s_p)->required()->check(CLI::Range(2, 31));
    stability->add_option("--alpha", s_alpha)->required();
    stability->add_option("--coloring-cap", s_cap, "exact coloring order cap");

    // regularity
    std::string rg_graph, rg_a, rg_b, rg_partition, rg_mode = "exact";
    int rg_p = 2, rg_r = 2, rg_trials = 2000, rg_cap = 14;
    double rg_eps = 0, rg_xi = 0.5, rg_cpr = 1.0 / 6;
    std::optional<std::uint64_t> rg_seed;
    auto* regularity = app.add_subcommand("regularity", "pair checks and partition classification");
    regularity->add_option("--graph", rg_graph)->required();
    regularity->add_option("--a", rg_a, "comma-separated side A (pair mode)");
    regularity->add_option("--b", rg_b, "comma-separated side B (pair mode)");
    regularity->add_option("--eps", rg_eps, "regularity eps (pair mode)");
    regularity->add_option("--partition", rg_partition, "partition file (partition mode)");
    regularity->add_option("--p", rg_p)->check(CLI::Range(2, 31));
    regularity->add_option("--r", rg_r)->check(CLI::PositiveNumber);
    regularity->add_option("--xi", rg_xi);
    regularity->add_option("--cpr", rg_cpr, "independent r-set density constant");
    regularity->add_option("--mode", rg_mode)->check(CLI::IsMember({"exact", "refute"}));
    regularity->add_option("--trials", rg_trials);
    regularity->add_option("--seed", rg_seed);
    regularity->add_option("--exact-cap", rg_cap);

    // lower-bound
    int lb_m = 20, lb_k = 1, lb_r = 2;
    std::optional<int> lb_q;
    long long lb_trials = 100;
    std::optional<std::uint64_t> lb_seed;
    auto* lower = app.add_subcommand("lower-bound", "probabilistic lower-bound machinery");
    lower->add_option("--m", lb_m)->required();
    lower->add_option("--k", lb_k)->required();
    lower->add_option("--r", lb_r)->required();
    lower->add_option("--q", lb_q, "book page target (default m^k)");
    lower->add_option("--trials", lb_trials);
    lower->add_option("--seed", lb_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*constants) return cmd_constants(c_p, common);
        if (*books) return cmd_books(b_graph, b_r, b_q, common);
        if (*witness) return cmd_witness(w_p, w_q, w_r, common);
        if (*ramsey) return cmd_ramsey(rm_p, rm_q, rm_r, rm_cap, common);
        if (*stability) return cmd_stability(s_graph, s_p, s_alpha, s_cap, common);
        if (*regularity) {
            bool pair_mode = !rg_a.empty() || !rg_b.empty();
            bool partition_mode = !rg_partition.empty();
            if (pair_mode == partition_mode)
                throw std::invalid_argument("regularity: pass either --a/--b/--eps or --partition");
            if (pair_mode) {
                if (rg_a.empty() || rg_b.empty() || !(rg_eps > 0))
                    throw std::invalid_argument("regularity pair mode needs --a, --b and --eps > 0");
                return cmd_regularity_pair(rg_graph, rg_a, rg_b, rg_eps, rg_mode, rg_trials,
                                           rg_seed, rg_cap, common);
            }
            return cmd_regularity_partition(rg_graph, rg_partition, rg_p, rg_r, rg_xi, rg_cpr,
                                            rg_mode, rg_trials, rg_seed, rg_cap, common);
        }
        if (*lower) return cmd_lower_bound(lb_m, lb_k, lb_r, lb_q, lb_trials, lb_seed, common);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
