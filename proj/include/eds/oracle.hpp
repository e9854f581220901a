#pragma once

// Reference MST computations used to cross-check the Kruskal variants.
// prim_dense shares no code with them (no edge sort, no union-find).

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "eds/graph.hpp"
#include "eds/mst.hpp"

namespace eds {

/// Array-based O(n^2) Prim, restarted in every connected component.
inline MstResult prim_dense(const Graph& g) {
    MstResult r;
    const std::size_t n = g.vertex_count();
    if (n <= 1 || g.edge_count() == 0) return r;

    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    // lightest parallel edge per unordered pair
    std::vector<std::uint32_t> best(n * n, none);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.u == e.v) continue;
        auto& a = best[static_cast<std::size_t>(e.u) * n + e.v];
        if (a == none || e.weight < edges[a].weight) {
            a = static_cast<std::uint32_t>(i);
            best[static_cast<std::size_t>(e.v) * n + e.u] = a;
        }
    }

    std::vector<bool> in_tree(n, false);
    std::vector<double> key(n, inf);
    std::vector<std::uint32_t> via(n, none);
    for (std::size_t root = 0; root < n; ++root) {
        if (in_tree[root]) continue;
        key[root] = 0.0;
        std::vector<std::size_t> frontier{root};  // vertices reached from this root
        for (;;) {
            std::size_t pick = n;
            for (std::size_t v : frontier)
                if (!in_tree[v] && (pick == n || key[v] < key[pick])) pick = v;
            if (pick == n) break;
            in_tree[pick] = true;
            if (via[pick] != none) {
                r.edges.push_back(edges[via[pick]]);
                r.total_weight += edges[via[pick]].weight;
            }
            const std::uint32_t* row = &best[pick * n];
            for (std::size_t v = 0; v < n; ++v) {
                if (in_tree[v] || row[v] == none) continue;
                const double w = edges[row[v]].weight;
                if (key[v] == inf) frontier.push_back(v);
                if (via[v] == none || w < key[v]) {
                    key[v] = w;
                    via[v] = row[v];
                }
            }
        }
    }
    return r;
}

inline constexpr std::size_t kExhaustiveMaxVertices = 10;
inline constexpr std::size_t kExhaustiveMaxEdges = 20;

/// Minimum weight over every acyclic edge subset of size n - components.
inline double exhaustive_mst(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (n > kExhaustiveMaxVertices || m > kExhaustiveMaxEdges)
        throw std::invalid_argument("exhaustive_mst: graph too large (n <= 10 and m <= 20 required)");
    const std::size_t r = n - component_count(g);
    if (r == 0) return 0.0;

    const auto edges = g.edges();
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
        DisjointSetForest f(n);
        double w = 0.0;
        bool acyclic = true;
        for (auto i : pick) {
            if (!f.unite(edges[i].u, edges[i].v)) {
                acyclic = false;
                break;
            }
            w += edges[i].weight;
        }
        if (acyclic && w < best) best = w;

        // next r-combination of [0, m) in lexicographic order
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == m - r + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

}  // namespace eds
