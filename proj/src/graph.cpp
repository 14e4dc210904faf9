#include "bookram/graph.hpp"

#include <algorithm>

namespace bookram {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    GraphBuilder b(std::move(*this));
    for (auto [u, v] : edges) b.add_edge(u, v);
    *this = std::move(b).build();
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int u = 0; u < n_; ++u) d = std::min(d, degree(u));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::complete_multipartite(std::span<const int> part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s < 0) throw std::invalid_argument("complete_multipartite: negative part size");
        n += s;
    }
    GraphBuilder b(n);
    int u_base = 0;
    for (std::size_t i = 0; i < part_sizes.size(); ++i) {
        int v_base = u_base + part_sizes[i];
        for (std::size_t j = i + 1; j < part_sizes.size(); ++j) {
            for (int u = u_base; u < u_base + part_sizes[i]; ++u)
                for (int v = v_base; v < v_base + part_sizes[j]; ++v) b.add_edge(u, v);
            v_base += part_sizes[j];
        }
        u_base += part_sizes[i];
    }
    return std::move(b).build();
}

Graph Graph::turan(int n, int p) {
    if (p < 1) throw std::invalid_argument("turan: p must be >= 1");
    std::vector<int> sizes;
    int q = n / p, rem = n % p;
    for (int i = 0; i < p && (q > 0 || i < rem); ++i) sizes.push_back(q + (i < rem ? 1 : 0));
    return complete_multipartite(sizes);
}

void GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: loop");
    g_.rows_[static_cast<std::size_t>(u)].add(v);
    g_.rows_[static_cast<std::size_t>(v)].add(u);
}

void GraphBuilder::remove_edge(int u, int v) {
    g_.rows_[static_cast<std::size_t>(u)].remove(v);
    g_.rows_[static_cast<std::size_t>(v)].remove(u);
}

Graph complement(const Graph& g) {
    int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph induced(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw std::invalid_argument("induced: universe mismatch");
    std::vector<int> keep = s.to_vector();
    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return std::move(b).build();
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw std::invalid_argument("common_neighbors: universe mismatch");
    if (s.empty()) throw std::invalid_argument("common_neighbors: empty set");
    VertexSet acc = VertexSet::full(g.order());
    s.for_each([&](int u) { acc &= g.neighbors(u); });
    acc -= s;
    return acc;
}

// --- graph6 ---

namespace {

constexpr int kMaxOrder = (1 << 18) - 1;

void append_6bit_group(std::string& out, unsigned value) { out.push_back(static_cast<char>(value + 63)); }

unsigned read_6bit_group(const std::string& text, std::size_t offset) {
    if (offset >= text.size())
        throw Graph6ParseError("unexpected end of input", offset);
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126)
        throw Graph6ParseError("byte outside printable graph6 range", offset);
    return c - 63u;
}

}  // namespace

Graph6ParseError::Graph6ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    static const std::string kHeader = ">>graph6<<";
    if (text.compare(0, kHeader.size(), kHeader) == 0) pos = kHeader.size();

    const std::size_t order_start = pos;
    long long n = 0;
    unsigned first = read_6bit_group(text, pos);
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = first;
        ++pos;
    } else {
        ++pos;
        int groups = 3;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
            ++pos;
            groups = 6;
        }
        for (int i = 0; i < groups; ++i) {
            n = (n << 6) | read_6bit_group(text, pos);
            ++pos;
        }
    }
    if (n > kMaxOrder) throw Graph6ParseError("order exceeds 2^18 - 1", order_start);

    long long bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != body)
        throw Graph6ParseError("edge section length mismatch: expected " + std::to_string(body) +
                                   " bytes, got " + std::to_string(text.size() - pos),
                               pos);

    GraphBuilder b(static_cast<int>(n));
    long long bit_index = 0;
    // Column-major upper triangle: bits run (0,1), (0,2), (1,2), (0,3), ...
    int row = 0, col = 1;
    for (std::size_t i = 0; i < body; ++i) {
        unsigned group = read_6bit_group(text, pos + i);
        for (int k = 5; k >= 0; --k, ++bit_index) {
            bool set = (group >> k) & 1;
            if (bit_index >= bits) {
                if (set) throw Graph6ParseError("nonzero padding bits", pos + i);
                continue;
            }
            if (set) b.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return std::move(b).build();
}

std::string serialize_graph6(const Graph& g) {
    long long n = g.order();
    if (n > kMaxOrder) throw std::invalid_argument("serialize_graph6: order exceeds 2^18 - 1");
    std::string out;
    if (n <= 62) {
        append_6bit_group(out, static_cast<unsigned>(n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) append_6bit_group(out, (n >> shift) & 63);
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) append_6bit_group(out, (n >> shift) & 63);
    }

    unsigned group = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1u : 0u);
            if (++filled == 6) {
                append_6bit_group(out, group);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) append_6bit_group(out, group << (6 - filled));
    return out;
}

}  // namespace bookram
