#pragma once

// Sample-based quantile boundaries and the linear partition of edges into
// weight strata (phases 1 and 2 of Kruskal-EDS), plus the stratum-count rule.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

/// PRNG used for every seeded operation in the library.
using Rng = std::mt19937_64;

/// Below this edge count the stratified phases are skipped (k = 1).
inline constexpr std::size_t kMinStratifiedEdges = 200;

struct StrataParams {
    std::optional<std::size_t> k;  // nullopt = choose automatically
    std::uint64_t seed = 0;

    static StrataParams automatic(std::uint64_t seed = 0) { return {std::nullopt, seed}; }
    static StrataParams with_k(std::size_t k, std::uint64_t seed = 0) {
        if (k == 0) throw std::invalid_argument("stratum count k must be >= 1");
        return {k, seed};
    }
};

/// Strictly increasing cut points; |values| + 1 strata.
struct Boundaries {
    std::vector<double> values;

    std::size_t strata_count() const noexcept { return values.size() + 1; }
    bool empty() const noexcept { return values.empty(); }

    static Boundaries from_values(std::vector<double> v) {
        for (double x : v)
            if (!std::isfinite(x)) throw std::invalid_argument("boundary values must be finite");
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i - 1] < v[i])) throw std::invalid_argument("boundary values must be strictly increasing");
        return Boundaries{std::move(v)};
    }

    friend bool operator==(const Boundaries&, const Boundaries&) = default;
};

struct Stratification {
    std::vector<std::vector<Edge>> buckets;  // buckets[0] is the lightest stratum

    std::size_t nonempty_count() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(buckets.begin(), buckets.end(), [](const auto& b) { return !b.empty(); }));
    }
};

inline std::size_t isqrt(std::uint64_t x) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return static_cast<std::size_t>(r);
}

/// min(m, max(20, floor(2 sqrt m))), evaluated exactly as isqrt(4m).
inline std::size_t sample_size(std::size_t m) noexcept {
    return std::min(m, std::max<std::size_t>(20, isqrt(4 * static_cast<std::uint64_t>(m))));
}

/// k* = ceil(sqrt(m / ln(m + 1))), or 1 below kMinStratifiedEdges.
inline std::size_t optimal_k(std::size_t m) noexcept {
    if (m < kMinStratifiedEdges) return 1;
    const double md = static_cast<double>(m);
    return static_cast<std::size_t>(std::ceil(std::sqrt(md / std::log(md + 1.0))));
}

/// Draws `count` distinct indices from [0, population) with a partial
/// Fisher-Yates shuffle. The result is in draw order.
inline std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, std::uint64_t seed) {
    count = std::min(count, population);
    std::vector<std::size_t> idx(population);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, population - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(count);
    return idx;
}

/// Sorted weights of a uniform sample of sample_size(m) edges.
inline std::vector<double> sample_weights(std::span<const Edge> edges, std::uint64_t seed) {
    const auto picks = sample_indices(edges.size(), sample_size(edges.size()), seed);
    std::vector<double> w;
    w.reserve(picks.size());
    for (auto i : picks) w.push_back(edges[i].weight);
    std::sort(w.begin(), w.end());
    return w;
}

/// deduplicate(sorted[floor(i*s/k)] for i = 1..k-1).
inline Boundaries boundaries_from_sorted_sample(std::span<const double> sorted, std::size_t k) {
    if (k == 0) throw std::invalid_argument("stratum count k must be >= 1");
    Boundaries b;
    const std::uint64_t s = sorted.size();
    if (k == 1 || s == 0) return b;
    b.values.reserve(k - 1);
    for (std::uint64_t i = 1; i < k; ++i) b.values.push_back(sorted[(i * s) / k]);
    b.values.erase(std::unique(b.values.begin(), b.values.end()), b.values.end());
    return b;
}

inline Boundaries estimate_boundaries(std::span<const Edge> edges, std::size_t k, std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("stratum count k must be >= 1");
    if (k == 1 || edges.empty()) return {};
    const auto w = sample_weights(edges, seed);
    return boundaries_from_sorted_sample(w, k);
}

/// Bucket index of a weight: the number of boundary values <= w.
inline std::size_t stratum_of(const Boundaries& b, double w) noexcept {
    return static_cast<std::size_t>(std::upper_bound(b.values.begin(), b.values.end(), w) - b.values.begin());
}

/// Stable partition of edges into |b| + 1 weight strata.
inline Stratification partition(std::span<const Edge> edges, const Boundaries& b) {
    Stratification s;
    s.buckets.resize(b.strata_count());
    if (b.empty()) {
        s.buckets[0].assign(edges.begin(), edges.end());
        return s;
    }
    // Two passes: count then fill, so each bucket is allocated once.
    std::vector<std::uint32_t> slot(edges.size());
    std::vector<std::size_t> sizes(s.buckets.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        slot[i] = static_cast<std::uint32_t>(stratum_of(b, edges[i].weight));
        ++sizes[slot[i]];
    }
    for (std::size_t j = 0; j < sizes.size(); ++j) s.buckets[j].reserve(sizes[j]);
    for (std::size_t i = 0; i < edges.size(); ++i) s.buckets[slot[i]].push_back(edges[i]);
    return s;
}

}  // namespace eds
