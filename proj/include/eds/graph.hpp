#pragma once

// Edge and graph representation, disjoint-set forest, and the plain-text
// edge-list format shared by every algorithm in the library.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace eds {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 0.0;
    EdgeId id = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Total order used by every sort in the library: weight, then input position.
struct EdgeLess {
    constexpr bool operator()(const Edge& a, const Edge& b) const noexcept {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.id < b.id;
    }
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable vertex count plus edge sequence. Edge ids are assigned from the
/// position of each edge in the input sequence.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(checked_vertex_count(n)) {}

    Graph(std::size_t n, std::vector<Edge> edges)
        : n_(checked_vertex_count(n)), edges_(std::move(edges)) {
        if (edges_.size() > std::size_t{UINT32_MAX})
            throw GraphError("too many edges");
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto& e = edges_[i];
            if (e.u >= n_ || e.v >= n_)
                throw GraphError("edge " + std::to_string(i) + " references vertex outside [0, " +
                                 std::to_string(n_) + ")");
            if (!std::isfinite(e.weight))
                throw GraphError("edge " + std::to_string(i) + " has non-finite weight");
            e.id = static_cast<EdgeId>(i);
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

private:
    static std::size_t checked_vertex_count(std::size_t n) {
        if (n > std::size_t{UINT32_MAX}) throw GraphError("vertex count exceeds 32-bit index range");
        return n;
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Union-find with path compression and union by rank.
class DisjointSetForest {
public:
    explicit DisjointSetForest(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }

    std::size_t size() const noexcept { return parent_.size(); }
    std::size_t component_count() const noexcept { return components_; }

    VertexId find(VertexId x) {
        check(x);
        VertexId root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            VertexId next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    /// Returns true iff a and b were in different components before the call.
    bool unite(VertexId a, VertexId b) {
        VertexId ra = find(a);
        VertexId rb = find(b);
        if (ra == rb) return false;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        --components_;
        return true;
    }

    bool same(VertexId a, VertexId b) { return find(a) == find(b); }

private:
    void check(VertexId x) const {
        if (x >= parent_.size())
            throw std::out_of_range("vertex " + std::to_string(x) + " out of range for forest of size " +
                                    std::to_string(parent_.size()));
    }

    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t components_;
};

inline std::size_t component_count(const Graph& g) {
    DisjointSetForest f(g.vertex_count());
    for (const auto& e : g.edges()) f.unite(e.u, e.v);
    return f.component_count();
}

// ---------------------------------------------------------------------------
// Edge-list text format:
//   # comment
//   n m
//   u v w     (m times)

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
bool parse_number(std::string_view tok, T& out) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (!have_header) {
            if (toks.size() != 2) throw ParseError(lineno, "expected header 'n m'");
            std::uint64_t nn = 0, mm = 0;
            if (!detail::parse_number(toks[0], nn) || !detail::parse_number(toks[1], mm))
                throw ParseError(lineno, "malformed header '" + line + "'");
            if (nn > UINT32_MAX || mm > UINT32_MAX) throw ParseError(lineno, "header value out of range");
            n = nn;
            m = mm;
            edges.reserve(m);
            have_header = true;
            continue;
        }
        if (edges.size() == m) throw ParseError(lineno, "more edge lines than the declared " + std::to_string(m));
        if (toks.size() != 3) throw ParseError(lineno, "expected 'u v w'");
        std::uint64_t u = 0, v = 0;
        double w = 0.0;
        if (!detail::parse_number(toks[0], u) || !detail::parse_number(toks[1], v))
            throw ParseError(lineno, "malformed vertex index in '" + line + "'");
        if (!detail::parse_number(toks[2], w)) throw ParseError(lineno, "malformed weight in '" + line + "'");
        if (u >= n || v >= n) throw ParseError(lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
        if (!std::isfinite(w)) throw ParseError(lineno, "non-finite weight");
        edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v), w, 0});
    }
    if (!have_header) throw ParseError(lineno, "missing header 'n m'");
    if (edges.size() != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

/// Shortest decimal representation that parses back to the same double.
inline std::string format_weight_exact(double w) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
    return std::string(buf, ptr);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_weight_exact(e.weight) << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace eds
