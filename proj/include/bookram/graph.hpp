#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bookram {

// Subset of {0, ..., universe-1} packed into 64-bit words.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }
    static VertexSet of(int universe, std::span<const int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    int universe() const { return universe_; }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool contains(int v) const {
        return v >= 0 && v < universe_ && (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    }
    void add(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void remove(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    // Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i])));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w))));
                w &= w - 1;
            }
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    int intersection_count(const VertexSet& o) const {
        require_same(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const VertexSet& o) const {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        require_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

  private:
    void check(int v) const {
        if (v < 0 || v >= universe_) throw std::invalid_argument("VertexSet: vertex out of range");
    }
    void require_same(const VertexSet& o) const {
        if (universe_ != o.universe_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph on {0, ..., n-1}. Adjacency is one bit row per
// vertex, so neighborhood algebra is word-parallel. Instances are immutable
// after construction; build with GraphBuilder or a factory.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    long long edge_count() const;
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int u) const { return rows_[static_cast<std::size_t>(u)].count(); }
    int min_degree() const;
    const VertexSet& neighbors(int u) const { return rows_[static_cast<std::size_t>(u)]; }
    VertexSet vertex_set() const { return VertexSet::full(n_); }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

    static Graph complete(int n);
    // Complete multipartite graph; parts in the given order, consecutively labeled.
    static Graph complete_multipartite(std::span<const int> part_sizes);
    // Balanced complete p-partite graph on n vertices (the Turan graph T(n, p)).
    static Graph turan(int n, int p);

  private:
    friend class GraphBuilder;
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

class GraphBuilder {
  public:
    explicit GraphBuilder(int n) : g_(n) {}
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    int order() const { return g_.n_; }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    const VertexSet& neighbors(int u) const { return g_.neighbors(u); }
    const Graph& view() const { return g_; }
    Graph build() && { return std::move(g_); }
    Graph snapshot() const { return g_; }

  private:
    Graph g_;
};

Graph complement(const Graph& g);
Graph induced(const Graph& g, const VertexSet& s);

// Intersection of the neighborhoods of all members of s (members themselves
// excluded). s must be nonempty.
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

// graph6 text format: short order encoding for n <= 62, 4-byte long form for
// n <= 258047, 8-byte form above that (orders are capped at 2^18 - 1 here).
// Upper-triangle edge bits in column-major order, packed big-endian into
// 6-bit groups, each printed as its value + 63; padding bits are zero.
struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& what, std::size_t offset);
    std::size_t byte_offset;
};

Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

}  // namespace bookram
