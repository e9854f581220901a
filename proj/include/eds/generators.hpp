#pragma once

// Seeded graph families and edge-weight distributions used by the
// validation suite and the benchmark harness.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "eds/graph.hpp"
#include "eds/strata.hpp"

namespace eds {

class WeightDist {
public:
    enum class Kind { Uniform, HalfNormal, Pareto, Clustered };

    static WeightDist uniform(double lo = 0.0, double hi = 1000.0) {
        if (!(lo < hi)) throw std::invalid_argument("uniform weight range must satisfy lo < hi");
        WeightDist d(Kind::Uniform);
        d.a_ = lo;
        d.b_ = hi;
        return d;
    }
    /// |N(mean, sd)|
    static WeightDist half_normal(double mean = 500.0, double sd = 100.0) {
        if (!(sd > 0)) throw std::invalid_argument("standard deviation must be positive");
        WeightDist d(Kind::HalfNormal);
        d.a_ = mean;
        d.b_ = sd;
        return d;
    }
    static WeightDist pareto(double alpha = 1.5, double scale = 1.0) {
        if (!(alpha > 0) || !(scale > 0)) throw std::invalid_argument("pareto alpha and scale must be positive");
        WeightDist d(Kind::Pareto);
        d.a_ = alpha;
        d.b_ = scale;
        return d;
    }
    /// Uniformly chosen center from {100, 300, 500, 700, 900} plus N(0, sd).
    static WeightDist clustered(double sd = 30.0) {
        if (!(sd > 0)) throw std::invalid_argument("standard deviation must be positive");
        WeightDist d(Kind::Clustered);
        d.b_ = sd;
        return d;
    }

    Kind kind() const noexcept { return kind_; }

    std::string name() const {
        switch (kind_) {
            case Kind::Uniform: return "uniform";
            case Kind::HalfNormal: return "normal";
            case Kind::Pareto: return "pareto";
            case Kind::Clustered: return "clustered";
        }
        return "?";
    }

    double pareto_alpha() const noexcept { return kind_ == Kind::Pareto ? a_ : 0.0; }

    template <class URBG>
    double operator()(URBG& rng) const {
        switch (kind_) {
            case Kind::Uniform:
                return std::uniform_real_distribution<double>(a_, b_)(rng);
            case Kind::HalfNormal:
                return std::abs(std::normal_distribution<double>(a_, b_)(rng));
            case Kind::Pareto: {
                // inverse CDF with U on (0, 1]
                const double u = 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
                return b_ * std::pow(u, -1.0 / a_);
            }
            case Kind::Clustered: {
                static constexpr std::array<double, 5> centers{100.0, 300.0, 500.0, 700.0, 900.0};
                const auto c = std::uniform_int_distribution<std::size_t>(0, centers.size() - 1)(rng);
                const double w = centers[c] + std::normal_distribution<double>(0.0, b_)(rng);
                return std::max(w, 0.001);
            }
        }
        return 0.0;
    }

private:
    explicit WeightDist(Kind k) : kind_(k) {}

    Kind kind_;
    double a_ = 0.0;
    double b_ = 0.0;
};

inline std::uint64_t max_simple_edges(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Connected simple graph: random spanning tree over a shuffled vertex order
/// plus m - (n - 1) distinct extra pairs. Edge order is shuffled.
inline Graph gen_random(std::size_t n, std::size_t m, const WeightDist& dist, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random: need n >= 2 (got " + std::to_string(n) + ")");
    if (n > UINT32_MAX) throw std::invalid_argument("gen_random: n exceeds 32-bit vertex range");
    if (m < n - 1)
        throw std::invalid_argument("gen_random: m=" + std::to_string(m) + " is below n-1=" + std::to_string(n - 1) +
                                    " (cannot be connected)");
    if (m > max_simple_edges(n))
        throw std::invalid_argument("gen_random: m=" + std::to_string(m) + " exceeds n(n-1)/2=" +
                                    std::to_string(max_simple_edges(n)));

    Rng rng(seed);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    const auto key = [n](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * n + b;
    };

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(m);
    std::unordered_set<std::uint64_t> used;
    used.reserve(m * 2);
    for (std::size_t i = 1; i < n; ++i) {
        const auto j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        pairs.emplace_back(perm[i], perm[j]);
        used.insert(key(perm[i], perm[j]));
    }

    const std::size_t extra = m - (n - 1);
    const std::uint64_t free_pairs = max_simple_edges(n) - (n - 1);
    if (extra > free_pairs / 2) {
        // Dense request: enumerate the complement and take a random subset.
        std::vector<std::pair<VertexId, VertexId>> candidates;
        candidates.reserve(free_pairs);
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                if (!used.count(key(a, b))) candidates.emplace_back(a, b);
        for (std::size_t i = 0; i < extra; ++i) {
            const auto j = std::uniform_int_distribution<std::size_t>(i, candidates.size() - 1)(rng);
            std::swap(candidates[i], candidates[j]);
            pairs.push_back(candidates[i]);
        }
    } else {
        std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
        while (pairs.size() < m) {
            const VertexId a = vertex(rng), b = vertex(rng);
            if (a == b || !used.insert(key(a, b)).second) continue;
            pairs.emplace_back(a, b);
        }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);

    std::vector<Edge> edges;
    edges.reserve(m);
    for (auto [a, b] : pairs) edges.push_back(Edge{a, b, dist(rng), 0});
    return Graph(n, std::move(edges));
}

/// r x c grid with one edge per horizontal and vertical neighbour pair.
inline Graph gen_grid(std::size_t rows, std::size_t cols, const WeightDist& dist, std::uint64_t seed) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("gen_grid: rows and cols must be >= 1");
    if (rows * cols > UINT32_MAX) throw std::invalid_argument("gen_grid: too many vertices");
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(2 * rows * cols - rows - cols);
    const auto at = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back(Edge{at(r, c), at(r, c + 1), dist(rng), 0});
            if (r + 1 < rows) edges.push_back(Edge{at(r, c), at(r + 1, c), dist(rng), 0});
        }
    }
    return Graph(rows * cols, std::move(edges));
}

inline Graph gen_path(std::size_t n, const WeightDist& dist, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_path: n must be >= 1");
    if (n > UINT32_MAX) throw std::invalid_argument("gen_path: too many vertices");
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back(Edge{static_cast<VertexId>(i), static_cast<VertexId>(i + 1), dist(rng), 0});
    return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Named families

enum class Family { Sparse, Medium, Dense, Normal, Power, Clustered, Grid, Path };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Sparse: return "sparse";
        case Family::Medium: return "medium";
        case Family::Dense: return "dense";
        case Family::Normal: return "normal";
        case Family::Power: return "power";
        case Family::Clustered: return "clustered";
        case Family::Grid: return "grid";
        case Family::Path: return "path";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (auto f : {Family::Sparse, Family::Medium, Family::Dense, Family::Normal, Family::Power, Family::Clustered,
                   Family::Grid, Family::Path})
        if (s == family_name(f)) return f;
    return std::nullopt;
}

inline WeightDist family_weights(Family f) {
    switch (f) {
        case Family::Normal: return WeightDist::half_normal();
        case Family::Power: return WeightDist::pareto();
        case Family::Clustered: return WeightDist::clustered();
        default: return WeightDist::uniform();
    }
}

/// Default edge count of a random family: 1.2n (sparse), 10n (medium),
/// n^2/2 (dense). Clamped to the feasible range [n-1, n(n-1)/2].
inline std::size_t family_edge_count(Family f, std::size_t n) {
    std::uint64_t m = 0;
    switch (f) {
        case Family::Medium: m = 10 * static_cast<std::uint64_t>(n); break;
        case Family::Dense: m = static_cast<std::uint64_t>(n) * n / 2; break;
        default: m = (12 * static_cast<std::uint64_t>(n) + 5) / 10; break;
    }
    m = std::min<std::uint64_t>(m, max_simple_edges(n));
    return static_cast<std::size_t>(std::max<std::uint64_t>(m, n == 0 ? 0 : n - 1));
}

}  // namespace eds
