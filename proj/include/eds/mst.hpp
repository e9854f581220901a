#pragma once

// Kruskal variants sharing one result type: global sort (kruskal_std),
// lazy binary heap (kruskal_heap), and stratified early-terminating
// Kruskal-EDS (kruskal_eds).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eds/graph.hpp"
#include "eds/strata.hpp"

namespace eds {

struct Metrics {
    std::size_t sort_ops = 0;          // edges passed through a sort (or heap pops)
    std::size_t strata_processed = 0;  // buckets sorted before termination
    std::size_t strata_total = 0;      // |boundaries| + 1
    std::size_t strata_nonempty = 0;   // buckets holding at least one edge
    std::int64_t phase1_ns = 0;
    std::int64_t phase2_ns = 0;
    std::int64_t phase3_ns = 0;
    std::size_t union_calls = 0;

    std::int64_t total_ns() const noexcept { return phase1_ns + phase2_ns + phase3_ns; }
};

struct MstResult {
    std::vector<Edge> edges;
    double total_weight = 0.0;
    Metrics metrics;

    std::size_t accepted_count() const noexcept { return edges.size(); }
};

/// Same forest size and total weight within 1e-9 relative.
inline bool mst_weight_equal(const MstResult& a, const MstResult& b) {
    return a.accepted_count() == b.accepted_count() &&
           std::abs(a.total_weight - b.total_weight) <= 1e-9 * std::max(1.0, std::abs(a.total_weight));
}

inline bool weight_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline std::int64_t elapsed_ns(Clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

struct NoStratumObserver {
    void operator()(const Edge&, std::size_t) const noexcept {}
};

inline bool trivial_input(const Graph& g) { return g.vertex_count() <= 1 || g.edge_count() == 0; }

}  // namespace detail

inline MstResult kruskal_std(const Graph& g) {
    MstResult r;
    if (detail::trivial_input(g)) return r;
    const std::size_t target = g.vertex_count() - 1;

    auto t = detail::Clock::now();
    std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
    std::sort(sorted.begin(), sorted.end(), EdgeLess{});
    r.metrics.sort_ops = sorted.size();
    r.metrics.strata_processed = r.metrics.strata_total = r.metrics.strata_nonempty = 1;
    r.metrics.phase1_ns = detail::elapsed_ns(t);

    t = detail::Clock::now();
    DisjointSetForest uf(g.vertex_count());
    r.edges.reserve(target);
    for (const auto& e : sorted) {
        ++r.metrics.union_calls;
        if (uf.unite(e.u, e.v)) {
            r.edges.push_back(e);
            r.total_weight += e.weight;
            if (r.edges.size() == target) break;
        }
    }
    r.metrics.phase3_ns = detail::elapsed_ns(t);
    return r;
}

/// Heapify all edges in O(m), then pop lazily until the forest is complete or
/// the heap is exhausted. sort_ops counts pops.
inline MstResult kruskal_heap(const Graph& g) {
    MstResult r;
    if (detail::trivial_input(g)) return r;
    const std::size_t target = g.vertex_count() - 1;

    auto t = detail::Clock::now();
    std::vector<Edge> heap(g.edges().begin(), g.edges().end());
    const auto greater = [](const Edge& a, const Edge& b) { return EdgeLess{}(b, a); };
    std::make_heap(heap.begin(), heap.end(), greater);
    r.metrics.phase1_ns = detail::elapsed_ns(t);
    r.metrics.strata_total = r.metrics.strata_nonempty = 1;

    t = detail::Clock::now();
    DisjointSetForest uf(g.vertex_count());
    r.edges.reserve(target);
    while (!heap.empty() && r.edges.size() < target) {
        std::pop_heap(heap.begin(), heap.end(), greater);
        const Edge e = heap.back();
        heap.pop_back();
        ++r.metrics.sort_ops;
        ++r.metrics.union_calls;
        if (uf.unite(e.u, e.v)) {
            r.edges.push_back(e);
            r.total_weight += e.weight;
        }
    }
    r.metrics.strata_processed = 1;
    r.metrics.phase3_ns = detail::elapsed_ns(t);
    return r;
}

namespace detail {

template <class Observer>
MstResult process_strata(const Graph& g, Stratification strata, MstResult r, Observer& on_accept) {
    const std::size_t target = g.vertex_count() - 1;
    auto t = Clock::now();
    DisjointSetForest uf(g.vertex_count());
    r.edges.reserve(target);
    for (std::size_t i = 0; i < strata.buckets.size(); ++i) {
        auto& bucket = strata.buckets[i];
        std::sort(bucket.begin(), bucket.end(), EdgeLess{});
        r.metrics.sort_ops += bucket.size();
        ++r.metrics.strata_processed;
        for (const auto& e : bucket) {
            ++r.metrics.union_calls;
            if (!uf.unite(e.u, e.v)) continue;
            r.edges.push_back(e);
            r.total_weight += e.weight;
            on_accept(e, i);
            if (r.edges.size() == target) {
                r.metrics.phase3_ns = elapsed_ns(t);
                return r;
            }
        }
    }
    r.metrics.phase3_ns = elapsed_ns(t);
    return r;
}

}  // namespace detail

/// Kruskal-EDS. `on_accept(edge, stratum_index)` is invoked for every
/// accepted edge, in acceptance order.
template <class Observer = detail::NoStratumObserver>
MstResult kruskal_eds(const Graph& g, const StrataParams& params, Observer&& on_accept = {}) {
    MstResult r;
    if (detail::trivial_input(g)) return r;
    const std::size_t k = params.k.value_or(optimal_k(g.edge_count()));
    if (k == 0) throw std::invalid_argument("stratum count k must be >= 1");

    Boundaries b;
    if (k > 1) {
        auto t = detail::Clock::now();
        b = estimate_boundaries(g.edges(), k, params.seed);
        r.metrics.phase1_ns = detail::elapsed_ns(t);
    }
    auto t = detail::Clock::now();
    Stratification strata = partition(g.edges(), b);
    r.metrics.phase2_ns = detail::elapsed_ns(t);
    r.metrics.strata_total = strata.buckets.size();
    r.metrics.strata_nonempty = strata.nonempty_count();
    return detail::process_strata(g, std::move(strata), std::move(r), on_accept);
}

/// Kruskal-EDS with caller-supplied boundaries in place of the sampled ones.
template <class Observer = detail::NoStratumObserver>
MstResult kruskal_eds_with_boundaries(const Graph& g, const Boundaries& b, Observer&& on_accept = {}) {
    MstResult r;
    if (detail::trivial_input(g)) return r;
    auto t = detail::Clock::now();
    Stratification strata = partition(g.edges(), b);
    r.metrics.phase2_ns = detail::elapsed_ns(t);
    r.metrics.strata_total = strata.buckets.size();
    r.metrics.strata_nonempty = strata.nonempty_count();
    return detail::process_strata(g, std::move(strata), std::move(r), on_accept);
}

enum class Algorithm { Std, Eds, Heap };

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Std: return "std";
        case Algorithm::Eds: return "eds";
        case Algorithm::Heap: return "heap";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
    if (s == "std") return Algorithm::Std;
    if (s == "eds") return Algorithm::Eds;
    if (s == "heap") return Algorithm::Heap;
    return std::nullopt;
}

inline MstResult run_mst(Algorithm algo, const Graph& g, const StrataParams& params = {}) {
    switch (algo) {
        case Algorithm::Std: return kruskal_std(g);
        case Algorithm::Heap: return kruskal_heap(g);
        case Algorithm::Eds: return kruskal_eds(g, params);
    }
    return {};
}

}  // namespace eds
