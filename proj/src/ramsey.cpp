#include "bookram/ramsey.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bookram/cliques.hpp"
#include "bookram/parallel.hpp"

namespace bookram {

namespace {

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Does the complement gain a B_q^(r) whose structure uses new edge (u, v)?
// Every edge of a book touches its base, so it suffices to scan bases
// containing u or v.
bool book_through(const Graph& comp, int q, int r, int u, int v) {
    for (int w : {u, v}) {
        bool hit = for_each_clique(comp, r - 1, comp.neighbors(w),
                                   [&](const VertexSet&, const VertexSet& common) {
                                       return (common & comp.neighbors(w)).count() >= q;
                                   });
        if (hit) return true;
    }
    return false;
}

bool clique_through(const Graph& pres, int p, int u, int v) {
    VertexSet cand = pres.neighbors(u) & pres.neighbors(v);
    return for_each_clique(pres, p - 1, cand, [](const VertexSet&, const VertexSet&) { return true; });
}

struct SubtreeResult {
    bool found = false;
    Graph counterexample;
    long long nodes = 0;
};

// DFS over the undecided edges (those not in row 0), absent-first. pres holds
// decided-present edges, comp decided-absent ones.
class ArrowSearch {
  public:
    ArrowSearch(int n, int p, int q, int r) : n_(n), p_(p), q_(q), r_(r), pres_(n), comp_(n) {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges_.emplace_back(i, j);
    }

    SubtreeResult run(int zero_degree) {
        SubtreeResult out;
        for (int j = 1; j < n_; ++j) {
            if (j <= zero_degree)
                pres_.add_edge(0, j);
            else
                comp_.add_edge(0, j);
        }
        ++out.nodes;
        // row 0 lands in one shot, so check it wholesale
        if (!contains_clique(pres_.view(), p_ + 1) && !contains_book(comp_.view(), q_, r_))
            dfs(0, out);
        return out;
    }

  private:
    void dfs(std::size_t idx, SubtreeResult& out) {
        if (out.found) return;
        if (idx == edges_.size()) {
            // Every prefix passed the incremental checks, so this is a
            // counterexample; re-verify from scratch all the same.
            Graph g = pres_.snapshot();
            if (contains_clique(g, p_ + 1) || contains_book(complement(g), q_, r_))
                throw ContractViolation("arrows: leaf failed independent re-verification");
            out.found = true;
            out.counterexample = std::move(g);
            return;
        }
        auto [u, v] = edges_[idx];

        ++out.nodes;
        comp_.add_edge(u, v);
        if (!book_through(comp_.view(), q_, r_, u, v)) dfs(idx + 1, out);
        comp_.remove_edge(u, v);
        if (out.found) return;

        ++out.nodes;
        pres_.add_edge(u, v);
        if (!clique_through(pres_.view(), p_, u, v)) dfs(idx + 1, out);
        pres_.remove_edge(u, v);
    }

    int n_, p_, q_, r_;
    GraphBuilder pres_, comp_;
    std::vector<std::pair<int, int>> edges_;
};

}  // namespace

Graph build_witness(int p, int q, int r) {
    if (p < 2 || q < 1 || r < 1) throw std::invalid_argument("build_witness: need p >= 2, q, r >= 1");
    std::vector<int> sizes(static_cast<std::size_t>(p), q + r - 1);
    return Graph::complete_multipartite(sizes);
}

bool verify_witness(const Graph& g, int p, int q, int r) {
    return !contains_clique(g, p + 1) && !contains_book(complement(g), q, r);
}

ArrowingVerdict arrows(int n, int p, int q, int r, const SearchConfig& config) {
    if (n < 1) throw std::invalid_argument("arrows: order must be positive");
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("arrows: parameters must be positive");
    if (n > config.order_cap)
        throw std::invalid_argument("arrows: order " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(config.order_cap));

    auto start = std::chrono::steady_clock::now();
    ArrowingVerdict out;
    out.n = n;
    out.p = p;
    out.q = q;
    out.r = r;

    // Any graph can be relabeled so N(0) = {1, ..., d}; subtrees by d,
    // ascending, follow the lex order of the edge bit-string.
    auto results = run_indexed<SubtreeResult>(
        n, resolve_thread_cap(config.threads),
        [&](int d) { return ArrowSearch(n, p, q, r).run(d); });

    out.arrows = true;
    for (auto& res : results) {
        out.graphs_examined += res.nodes;
        if (!res.found) continue;
        if (out.arrows) {
            out.arrows = false;
            out.counterexample = std::move(res.counterexample);
        }
    }
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

RamseyCertificate ramsey_number(int p, int q, int r, int n_cap, const SearchConfig& config) {
    RamseyCertificate cert;
    cert.p = p;
    cert.q = q;
    cert.r = r;

    SearchConfig cfg = config;
    cfg.order_cap = std::max(cfg.order_cap, n_cap);

    int n = std::max(1, p * (q + r - 1));
    if (n > n_cap) {
        // even the construction's order is out of reach; certify the best
        // lower bound the cap allows and leave the value open
        cert.search_log.push_back(arrows(n_cap, p, q, r, cfg));
        return cert;
    }
    auto first = arrows(n, p, q, r, cfg);
    cert.search_log.push_back(first);
    if (first.arrows) {
        // walk down to the last arrowing order
        while (n > 1) {
            auto below = arrows(n - 1, p, q, r, cfg);
            cert.search_log.push_back(below);
            if (!below.arrows) break;
            --n;
        }
        cert.value = n;
    } else {
        while (n < n_cap) {
            ++n;
            auto verdict = arrows(n, p, q, r, cfg);
            cert.search_log.push_back(verdict);
            if (verdict.arrows) {
                cert.value = n;
                break;
            }
        }
    }

    std::sort(cert.search_log.begin(), cert.search_log.end(),
              [](const ArrowingVerdict& a, const ArrowingVerdict& b) { return a.n < b.n; });
    if (cert.value) {
        for (const auto& verdict : cert.search_log)
            if (verdict.n == *cert.value - 1 && verdict.counterexample)
                cert.witness = verdict.counterexample;
        // at the formula value, the p-partite construction is the canonical
        // witness; the searched counterexample stays in the log
        Graph constructed = build_witness(p, q, r);
        if (constructed.order() == *cert.value - 1 && verify_witness(constructed, p, q, r))
            cert.witness = std::move(constructed);
        cert.formula_match = *cert.value == cert.formula();
    }
    return cert;
}

std::string serialize_certificate(const RamseyCertificate& cert) {
    std::ostringstream out;
    out << "schema bookram.ramsey/1\n";
    out << "p " << cert.p << "\nq " << cert.q << "\nr " << cert.r << "\n";
    out << "formula " << cert.formula() << "\n";
    out << "status " << (cert.value ? "complete" : "capped") << "\n";
    if (cert.value) {
        out << "value " << *cert.value << "\n";
        out << "formula_match " << (cert.formula_match ? "true" : "false") << "\n";
    }
    if (cert.witness) {
        out << "witness_order " << cert.witness->order() << "\n";
        out << "witness " << serialize_graph6(*cert.witness) << "\n";
    }
    for (const auto& verdict : cert.search_log) {
        out << "search n=" << verdict.n << " arrows=" << (verdict.arrows ? "true" : "false")
            << " examined=" << verdict.graphs_examined;
        if (verdict.counterexample) out << " counterexample=" << serialize_graph6(*verdict.counterexample);
        out << "\n";
    }
    return out.str();
}

std::optional<KprEmbedding> find_kpr(const Graph& g, int p, int r) {
    if (p < 1 || r < 1) throw std::invalid_argument("find_kpr: parameters must be positive");
    Graph comp = complement(g);
    std::vector<VertexSet> classes;

    // Each class is an independent r-set (an r-clique of the complement)
    // drawn from the vertices adjacent to everything already placed.
    auto rec = [&](auto&& self, int left, const VertexSet& cand) -> bool {
        if (left == 0) return true;
        return for_each_clique(comp, r, cand, [&](const VertexSet& cls, const VertexSet&) {
            VertexSet next = cand;
            cls.for_each([&](int v) { next &= g.neighbors(v); });
            classes.push_back(cls);
            if (self(self, left - 1, next)) return true;
            classes.pop_back();
            return false;
        });
    };
    if (!rec(rec, p, VertexSet::full(g.order()))) return std::nullopt;
    return KprEmbedding{classes};
}

PigeonholeOutcome pigeonhole_book(const Graph& g, int p, int r, const KprEmbedding& emb) {
    if (static_cast<int>(emb.classes.size()) != p)
        throw std::invalid_argument("pigeonhole_book: expected exactly p classes");
    VertexSet covered(g.order());
    for (const auto& cls : emb.classes) {
        if (cls.universe() != g.order() || cls.count() != r)
            throw std::invalid_argument("pigeonhole_book: classes must be r-sets on the host graph");
        if (covered.intersects(cls)) throw std::invalid_argument("pigeonhole_book: classes overlap");
        std::vector<int> vs = cls.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.adjacent(vs[i], vs[j]))
                    throw std::invalid_argument("pigeonhole_book: class is not independent");
        covered |= cls;
    }
    for (std::size_t i = 0; i < emb.classes.size(); ++i)
        for (std::size_t j = i + 1; j < emb.classes.size(); ++j) {
            bool complete = true;
            emb.classes[i].for_each([&](int u) {
                if (!emb.classes[j].is_subset_of(g.neighbors(u))) complete = false;
            });
            if (!complete)
                throw std::invalid_argument("pigeonhole_book: classes are not completely joined");
        }

    PigeonholeOutcome out;
    int n = g.order();
    out.page_floor = (static_cast<long long>(n) - static_cast<long long>(p) * r + p - 1) / p;

    std::vector<std::vector<int>> assigned(emb.classes.size());
    VertexSet outside = g.vertex_set() - covered;
    std::optional<VertexSet> clique;
    outside.for_each([&](int u) {
        if (clique) return;
        int free_class = -1;
        for (std::size_t c = 0; c < emb.classes.size(); ++c)
            if (!g.neighbors(u).intersects(emb.classes[c])) {
                free_class = static_cast<int>(c);
                break;
            }
        if (free_class >= 0) {
            assigned[static_cast<std::size_t>(free_class)].push_back(u);
            return;
        }
        // u touches every class: u plus one neighbor per class is a K_{p+1}
        VertexSet k(g.order());
        k.add(u);
        for (const auto& cls : emb.classes) k.add((g.neighbors(u) & cls).first());
        clique = std::move(k);
    });
    if (clique) {
        out.clique = std::move(clique);
        return out;
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < assigned.size(); ++c)
        if (assigned[c].size() > assigned[best].size()) best = c;
    VertexSet pages = VertexSet::of(g.order(), assigned[best]);
    if (static_cast<long long>(pages.count()) < out.page_floor)
        throw ContractViolation("pigeonhole_book: page floor violated");
    out.book = {emb.classes[best], std::move(pages)};
    return out;
}

}  // namespace bookram
