#pragma once

// Experiment harness: benchmark suite, k-sensitivity sweep, stratification
// profile and empirical speedup grid, with CSV emitters.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eds/generators.hpp"
#include "eds/graph.hpp"
#include "eds/mst.hpp"
#include "eds/strata.hpp"

namespace eds {

// ---------------------------------------------------------------------------
// Seeds

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Per-(label, trial) seed derived from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t trial) noexcept {
    return splitmix64(splitmix64(master ^ fnv1a(label)) + trial);
}

template <class T>
double median(std::vector<T> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    if (v.size() % 2 == 1) return static_cast<double>(v[h]);
    return (static_cast<double>(v[h - 1]) + static_cast<double>(v[h])) / 2.0;
}

// ---------------------------------------------------------------------------
// Suite

struct BenchConfig {
    std::string label;
    Family family;
    std::size_t n = 0;
    std::size_t m = 0;  // ignored for grid and path
    std::size_t rows = 0;
    std::size_t cols = 0;

    Graph generate(std::uint64_t seed) const {
        switch (family) {
            case Family::Grid: return gen_grid(rows, cols, family_weights(family), seed);
            case Family::Path: return gen_path(n, family_weights(family), seed);
            default: return gen_random(n, m, family_weights(family), seed);
        }
    }
};

/// The 14 benchmark configurations.
inline std::vector<BenchConfig> default_suite() {
    return {
        {"Sparse uniform", Family::Sparse, 500, 600, 0, 0},
        {"Sparse normal", Family::Normal, 500, 600, 0, 0},
        {"Sparse power", Family::Power, 500, 600, 0, 0},
        {"Sparse clustered", Family::Clustered, 500, 600, 0, 0},
        {"Medium uniform", Family::Medium, 500, 5000, 0, 0},
        {"Medium normal", Family::Normal, 500, 5000, 0, 0},
        {"Dense", Family::Dense, 300, 40000, 0, 0},
        {"Grid 20x20", Family::Grid, 400, 760, 20, 20},
        {"Grid 30x30", Family::Grid, 900, 1740, 30, 30},
        {"Path n=2000", Family::Path, 2000, 1999, 0, 0},
        {"Sparse n=2000", Family::Sparse, 2000, 2500, 0, 0},
        {"Sparse n=5000", Family::Sparse, 5000, 6000, 0, 0},
        {"Medium n=1000", Family::Medium, 1000, 10000, 0, 0},
        {"Power n=1000", Family::Power, 1000, 5000, 0, 0},
    };
}

struct BenchRecord {
    std::string graph_label;
    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;
    Algorithm algo = Algorithm::Std;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::int64_t time_ns = 0;
    std::size_t sort_ops = 0;
    std::size_t strata_processed = 0;
    std::size_t strata_total = 0;
    std::size_t strata_nonempty = 0;
    double mst_weight = 0.0;
    std::size_t mst_edges = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "graph,family,n,m,algo,trial,seed,time_ns,sort_ops,strata_processed,strata_total,mst_weight,mst_edges";

namespace detail {

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace detail

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << '\n';
    for (const auto& r : records) {
        out << detail::csv_field(r.graph_label) << ',' << r.family << ',' << r.n << ',' << r.m << ','
            << algorithm_name(r.algo) << ',' << r.trial << ',' << r.seed << ',' << r.time_ns << ',' << r.sort_ops
            << ',' << r.strata_processed << ',' << r.strata_total << ',' << format_weight_exact(r.mst_weight) << ','
            << r.mst_edges << '\n';
    }
}

inline BenchRecord make_record(const BenchConfig& c, const Graph& g, Algorithm algo, std::size_t trial,
                               std::uint64_t seed, const MstResult& r) {
    BenchRecord rec;
    rec.graph_label = c.label;
    rec.family = family_name(c.family);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.algo = algo;
    rec.trial = trial;
    rec.seed = seed;
    rec.time_ns = r.metrics.total_ns();
    rec.sort_ops = r.metrics.sort_ops;
    rec.strata_processed = r.metrics.strata_processed;
    rec.strata_total = r.metrics.strata_total;
    rec.strata_nonempty = r.metrics.strata_nonempty;
    rec.mst_weight = r.total_weight;
    rec.mst_edges = r.accepted_count();
    return rec;
}

/// Runs every configuration `trials` times; each trial generates one graph
/// from a derived seed and runs std, eds (k = auto) and heap on it.
inline std::vector<BenchRecord> run_suite(const std::vector<BenchConfig>& configs, std::size_t trials,
                                          std::uint64_t master_seed = 1) {
    if (trials < 1) throw std::invalid_argument("run_suite: trials must be >= 1");
    std::vector<BenchRecord> out;
    out.reserve(configs.size() * trials * 3);
    for (const auto& c : configs) {
        for (std::size_t t = 0; t < trials; ++t) {
            const std::uint64_t seed = derive_seed(master_seed, c.label, t);
            Graph g;
            try {
                g = c.generate(seed);
            } catch (const std::exception& e) {
                throw std::runtime_error("configuration '" + c.label + "': " + e.what());
            }
            for (auto algo : {Algorithm::Std, Algorithm::Eds, Algorithm::Heap}) {
                const auto r = run_mst(algo, g, StrataParams::automatic(seed));
                out.push_back(make_record(c, g, algo, t, seed, r));
            }
        }
    }
    return out;
}

struct SuiteSummary {
    std::string graph_label;
    std::size_t n = 0;
    std::size_t m = 0;
    double time_std_ns = 0, time_eds_ns = 0, time_heap_ns = 0;  // medians
    double speedup_eds = 0, speedup_heap = 0;                   // time(std) / time(algo)
    double ops_std = 0, ops_eds = 0;                            // medians
    double ops_ratio = 0;                                       // ops(std) / ops(eds)
    double strata_processed = 0, strata_total = 0, strata_nonempty = 0;  // eds medians
};

inline std::vector<SuiteSummary> summarize(const std::vector<BenchRecord>& records) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const BenchRecord*>> by_label;
    for (const auto& r : records) {
        if (!by_label.count(r.graph_label)) order.push_back(r.graph_label);
        by_label[r.graph_label].push_back(&r);
    }
    std::vector<SuiteSummary> out;
    for (const auto& label : order) {
        SuiteSummary s;
        s.graph_label = label;
        std::vector<std::int64_t> ts, te, th;
        std::vector<std::size_t> os, oe, sp, st, sn;
        for (const auto* r : by_label[label]) {
            s.n = r->n;
            s.m = r->m;
            switch (r->algo) {
                case Algorithm::Std:
                    ts.push_back(r->time_ns);
                    os.push_back(r->sort_ops);
                    break;
                case Algorithm::Eds:
                    te.push_back(r->time_ns);
                    oe.push_back(r->sort_ops);
                    sp.push_back(r->strata_processed);
                    st.push_back(r->strata_total);
                    sn.push_back(r->strata_nonempty);
                    break;
                case Algorithm::Heap: th.push_back(r->time_ns); break;
            }
        }
        s.time_std_ns = median(ts);
        s.time_eds_ns = median(te);
        s.time_heap_ns = median(th);
        s.speedup_eds = s.time_std_ns / s.time_eds_ns;
        s.speedup_heap = s.time_std_ns / s.time_heap_ns;
        s.ops_std = median(os);
        s.ops_eds = median(oe);
        s.ops_ratio = s.ops_eds > 0 ? s.ops_std / s.ops_eds : 1.0;
        s.strata_processed = median(sp);
        s.strata_total = median(st);
        s.strata_nonempty = median(sn);
        out.push_back(s);
    }
    return out;
}

inline void write_summary_csv(std::ostream& out, const std::vector<SuiteSummary>& rows) {
    out << "graph,n,m,time_std_ns,time_eds_ns,time_heap_ns,speedup_eds,speedup_heap,ops_std,ops_eds,ops_ratio,"
           "strata_processed,strata_total,strata_nonempty\n";
    for (const auto& s : rows) {
        out << detail::csv_field(s.graph_label) << ',' << s.n << ',' << s.m << ',' << s.time_std_ns << ','
            << s.time_eds_ns << ',' << s.time_heap_ns << ',' << s.speedup_eds << ',' << s.speedup_heap << ','
            << s.ops_std << ',' << s.ops_eds << ',' << s.ops_ratio << ',' << s.strata_processed << ','
            << s.strata_total << ',' << s.strata_nonempty << '\n';
    }
}

// ---------------------------------------------------------------------------
// k sweep

struct SweepRecord {
    std::size_t k = 0;
    double median_time_ns = 0;
    std::size_t sort_ops = 0;
    std::size_t strata_processed = 0;
    std::size_t strata_total = 0;
    std::size_t strata_nonempty = 0;
};

/// Runs kruskal_eds at each k. Every trial reuses `seed`, so the ops columns
/// are deterministic and only the timing is aggregated.
inline std::vector<SweepRecord> sweep_k(const Graph& g, const std::vector<std::size_t>& k_values, std::size_t trials,
                                        std::uint64_t seed = 1) {
    if (k_values.empty()) throw std::invalid_argument("sweep_k: k_values must be non-empty");
    if (trials < 1) throw std::invalid_argument("sweep_k: trials must be >= 1");
    std::vector<SweepRecord> out;
    for (auto k : k_values) {
        if (k < 1) throw std::invalid_argument("sweep_k: every k must be >= 1");
        SweepRecord rec;
        rec.k = k;
        std::vector<std::int64_t> times;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto r = kruskal_eds(g, StrataParams::with_k(k, seed));
            times.push_back(r.metrics.total_ns());
            rec.sort_ops = r.metrics.sort_ops;
            rec.strata_processed = r.metrics.strata_processed;
            rec.strata_total = r.metrics.strata_total;
            rec.strata_nonempty = r.metrics.strata_nonempty;
        }
        rec.median_time_ns = median(times);
        out.push_back(rec);
    }
    return out;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
    out << "k,median_time_ns,sort_ops,strata_processed,strata_total,strata_nonempty\n";
    for (const auto& r : rows)
        out << r.k << ',' << r.median_time_ns << ',' << r.sort_ops << ',' << r.strata_processed << ','
            << r.strata_total << ',' << r.strata_nonempty << '\n';
}

// ---------------------------------------------------------------------------
// Stratification profile

struct StrataProfile {
    std::vector<std::size_t> accepted;    // MST edges accepted per stratum
    std::vector<double> stratum_fractions;
};

inline StrataProfile strata_profile(const Graph& g, std::size_t k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("strata_profile: k must be >= 1");
    StrataProfile p;
    const auto r = kruskal_eds(g, StrataParams::with_k(k, seed), [&](const Edge&, std::size_t stratum) {
        if (p.accepted.size() <= stratum) p.accepted.resize(stratum + 1, 0);
        ++p.accepted[stratum];
    });
    p.accepted.resize(std::max<std::size_t>(r.metrics.strata_total, 1), 0);
    p.stratum_fractions.assign(p.accepted.size(), 0.0);
    const auto total = r.accepted_count();
    if (total > 0)
        for (std::size_t i = 0; i < p.accepted.size(); ++i)
            p.stratum_fractions[i] = static_cast<double>(p.accepted[i]) / static_cast<double>(total);
    return p;
}

inline void write_profile_csv(std::ostream& out, const StrataProfile& p) {
    out << "stratum,accepted_edges,fraction\n";
    for (std::size_t i = 0; i < p.accepted.size(); ++i)
        out << i << ',' << p.accepted[i] << ',' << std::setprecision(17) << p.stratum_fractions[i] << '\n';
}

// ---------------------------------------------------------------------------
// Empirical speedup grid over (density, skewness)

/// sigma = 0 gives uniform weights; otherwise Pareto with alpha = 1 / (0.1 + 2 sigma).
inline WeightDist skew_distribution(double sigma) {
    if (sigma <= 0.0) return WeightDist::uniform();
    return WeightDist::pareto(1.0 / (0.1 + 2.0 * sigma), 1.0);
}

inline constexpr std::string_view kSkewMappingDescription =
    "sigma=0 -> uniform[0,1000]; sigma>0 -> pareto(alpha=1/(0.1+2*sigma), scale=1)";

struct GridCell {
    double density = 0;
    double skew = 0;
    double alpha = 0;  // 0 for the uniform column
    std::size_t m = 0;
    bool skipped = false;
    double ops_ratio = 0;  // median ops(std) / ops(eds)
};

inline std::vector<GridCell> speedup_grid(const std::vector<double>& density_points,
                                          const std::vector<double>& skew_points, std::size_t n, std::size_t trials,
                                          std::uint64_t master_seed = 1) {
    if (trials < 1) throw std::invalid_argument("speedup_grid: trials must be >= 1");
    if (n < 2) throw std::invalid_argument("speedup_grid: n must be >= 2");
    for (double d : density_points)
        if (!(d > 0.0 && d <= 1.0)) throw std::invalid_argument("speedup_grid: density points must lie in (0, 1]");
    for (double s : skew_points)
        if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("speedup_grid: skew points must lie in [0, 1]");

    std::vector<GridCell> out;
    const double pairs = static_cast<double>(max_simple_edges(n));
    for (double rho : density_points) {
        for (double sigma : skew_points) {
            GridCell cell;
            cell.density = rho;
            cell.skew = sigma;
            const auto dist = skew_distribution(sigma);
            cell.alpha = dist.pareto_alpha();
            cell.m = static_cast<std::size_t>(std::llround(rho * pairs));
            if (cell.m < n - 1) {
                cell.skipped = true;
                out.push_back(cell);
                continue;
            }
            std::vector<double> ratios;
            std::ostringstream label;
            label << "grid:" << rho << ':' << sigma;
            for (std::size_t t = 0; t < trials; ++t) {
                const auto seed = derive_seed(master_seed, label.str(), t);
                const Graph g = gen_random(n, cell.m, dist, seed);
                const auto std_r = kruskal_std(g);
                const auto eds_r = kruskal_eds(g, StrataParams::automatic(seed));
                ratios.push_back(static_cast<double>(std_r.metrics.sort_ops) /
                                 static_cast<double>(std::max<std::size_t>(eds_r.metrics.sort_ops, 1)));
            }
            cell.ops_ratio = median(ratios);
            out.push_back(cell);
        }
    }
    return out;
}

inline void write_grid_csv(std::ostream& out, const std::vector<GridCell>& cells) {
    out << "density,skew,alpha,m,ops_ratio,status\n";
    for (const auto& c : cells) {
        out << c.density << ',' << c.skew << ',' << c.alpha << ',' << c.m << ',';
        if (c.skipped)
            out << "NA,skipped_infeasible_m\n";
        else
            out << c.ops_ratio << ",ok\n";
    }
}

}  // namespace eds
