#pragma once

// Subcommand implementations for the edsmst CLI. Argument parsing lives in
// edsmst.cpp; these functions take parsed options and output streams so they
// can be driven directly from tests.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eds/eds.hpp"

namespace eds::cli {

using json = nlohmann::json;

struct GenOptions {
    std::string family = "sparse";
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<std::size_t> rows;
    std::optional<std::size_t> cols;
    std::uint64_t seed = 1;
    std::string out;  // empty: standard output
};

struct MstOptions {
    std::string algo = "eds";
    std::string k = "auto";
    std::uint64_t seed = 1;
    std::string input;
    bool metrics = false;
};

struct ValidateOptions {
    std::uint64_t seed = 42;
    double inject_fault = 0.0;
};

struct BenchOptions {
    std::size_t trials = 3;
    std::uint64_t seed = 1;
    std::string out;
    std::string summary;
};

struct SweepOptions {
    std::string input;  // empty: sparse uniform n=500, m=600
    std::vector<std::size_t> k_values{2, 5, 10, 20, 50, 100, 200, 500};
    std::size_t trials = 3;
    std::uint64_t seed = 1;
    std::string out;
};

struct ProfileOptions {
    std::string input;  // empty: uniform random n=200, m=300
    std::size_t k = 7;
    std::uint64_t seed = 1;
    std::string out;
    std::string meta;
};

struct GridOptions {
    std::size_t n = 200;
    std::vector<double> density;
    std::vector<double> skew;
    std::size_t trials = 3;
    std::uint64_t seed = 1;
    std::string out;
    std::string meta;
};

namespace detail {

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_edge_list(in);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    } catch (const GraphError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

/// Runs `body` with the requested sink (file or `fallback`).
template <class F>
void with_sink(const std::string& path, std::ostream& fallback, F&& body) {
    if (path.empty() || path == "-") {
        body(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    body(static_cast<std::ostream&>(f));
    f.flush();
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

inline std::string sidecar_path(const std::string& out, const std::string& meta) {
    if (!meta.empty()) return meta;
    if (out.empty() || out == "-") return {};
    return out + ".meta.json";
}

inline void write_sidecar(const std::string& path, const json& j) {
    if (path.empty()) return;
    with_sink(path, std::cout, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

}  // namespace detail

inline Graph generate_family(const GenOptions& o) {
    const auto fam = parse_family(o.family);
    if (!fam) throw std::invalid_argument("unknown family '" + o.family + "'");
    const auto dist = family_weights(*fam);
    switch (*fam) {
        case Family::Grid: {
            if (!o.rows || !o.cols) throw std::invalid_argument("grid family requires --rows and --cols");
            return gen_grid(*o.rows, *o.cols, dist, o.seed);
        }
        case Family::Path:
            if (!o.n) throw std::invalid_argument("path family requires --n");
            return gen_path(*o.n, dist, o.seed);
        default: {
            if (!o.n) throw std::invalid_argument(o.family + " family requires --n");
            const auto m = o.m.value_or(family_edge_count(*fam, *o.n));
            return gen_random(*o.n, m, dist, o.seed);
        }
    }
}

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = generate_family(o);
        if (o.out.empty() || o.out == "-") {
            write_edge_list(out, g);
        } else {
            detail::with_sink(o.out, out, [&](std::ostream& os) { write_edge_list(os, g); });
            out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "gen: " << e.what() << '\n';
        return 1;
    }
}

inline json metrics_json(const Metrics& m) {
    return json{{"sort_ops", m.sort_ops},           {"strata_processed", m.strata_processed},
                {"strata_total", m.strata_total},   {"strata_nonempty", m.strata_nonempty},
                {"phase1_ns", m.phase1_ns},         {"phase2_ns", m.phase2_ns},
                {"phase3_ns", m.phase3_ns},         {"union_calls", m.union_calls}};
}

inline std::optional<StrataParams> parse_k(const std::string& k, std::uint64_t seed) {
    if (k == "auto") return StrataParams::automatic(seed);
    std::size_t value = 0;
    if (!eds::detail::parse_number(std::string_view(k), value) || value == 0) return std::nullopt;
    return StrataParams::with_k(value, seed);
}

inline int cmd_mst(const MstOptions& o, std::ostream& out, std::ostream& err) {
    const auto algo = parse_algorithm(o.algo);
    if (!algo) {
        err << "mst: unknown algorithm '" << o.algo << "' (expected std, eds or heap)\n";
        return 2;
    }
    const auto params = parse_k(o.k, o.seed);
    if (!params) {
        err << "mst: --k must be a positive integer or 'auto'\n";
        return 2;
    }
    try {
        const Graph g = detail::load_graph(o.input);
        const auto r = run_mst(*algo, g, *params);
        out << format_weight(r.total_weight) << '\n' << "edges " << r.accepted_count() << '\n';
        if (o.metrics) err << metrics_json(r.metrics).dump() << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "mst: " << e.what() << '\n';
        return 1;
    }
}

inline int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
    try {
        ValidationOptions vo;
        vo.seed = o.seed;
        vo.weight_perturbation = o.inject_fault;
        std::size_t failed = 0;
        for (const auto& r : run_validation(vo)) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << r.case_name << " [" << algorithm_name(r.algo) << "] n=" << r.n
                << " m=" << r.m << " weight=" << format_weight(r.weight) << " expected=" << format_weight(r.expected)
                << '\n';
            if (!r.pass) ++failed;
        }
        out << (failed == 0 ? "all cases passed" : std::to_string(failed) + " case(s) failed") << '\n';
        return failed == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "validate: " << e.what() << '\n';
        return 1;
    }
}

inline int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const auto records = run_suite(default_suite(), o.trials, o.seed);
        detail::with_sink(o.out, out, [&](std::ostream& os) { write_bench_csv(os, records); });
        const auto summary = summarize(records);
        if (!o.summary.empty())
            detail::with_sink(o.summary, out, [&](std::ostream& os) { write_summary_csv(os, summary); });
        if (!o.out.empty() && o.out != "-") {
            out << "wrote " << records.size() << " records to " << o.out << '\n';
            for (const auto& s : summary) {
                char line[256];
                std::snprintf(line, sizeof line, "%-18s n=%-5zu m=%-6zu ops %6.0f/%-6.0f (%5.2fx) strata %.0f/%.0f  time x%.2f (eds) x%.2f (heap)\n",
                              s.graph_label.c_str(), s.n, s.m, s.ops_eds, s.ops_std, s.ops_ratio, s.strata_processed,
                              s.strata_total, s.speedup_eds, s.speedup_heap);
                out << line;
            }
        }
        for (const auto& r : records)
            if (r.sort_ops > r.m) {
                err << "bench: sort_ops exceeds m for '" << r.graph_label << "'\n";
                return 1;
            }
        return 0;
    } catch (const std::exception& e) {
        err << "bench: " << e.what() << '\n';
        return 1;
    }
}

inline int cmd_sweep_k(const SweepOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = o.input.empty() ? gen_random(500, 600, WeightDist::uniform(), o.seed)
                                        : detail::load_graph(o.input);
        const auto rows = sweep_k(g, o.k_values, o.trials, o.seed);
        detail::with_sink(o.out, out, [&](std::ostream& os) { write_sweep_csv(os, rows); });
        return 0;
    } catch (const std::exception& e) {
        err << "sweep-k: " << e.what() << '\n';
        return 1;
    }
}

inline int cmd_profile(const ProfileOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = o.input.empty() ? gen_random(200, 300, WeightDist::uniform(), o.seed)
                                        : detail::load_graph(o.input);
        const auto p = strata_profile(g, o.k, o.seed);
        detail::with_sink(o.out, out, [&](std::ostream& os) { write_profile_csv(os, p); });
        detail::write_sidecar(detail::sidecar_path(o.out, o.meta),
                              json{{"input", o.input.empty() ? "generated:uniform:n=200:m=300" : o.input},
                                   {"n", g.vertex_count()},
                                   {"m", g.edge_count()},
                                   {"k", o.k},
                                   {"seed", o.seed},
                                   {"rng", "mt19937_64"}});
        return 0;
    } catch (const std::exception& e) {
        err << "profile: " << e.what() << '\n';
        return 1;
    }
}

inline int cmd_grid(const GridOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const auto cells = speedup_grid(o.density, o.skew, o.n, o.trials, o.seed);
        detail::with_sink(o.out, out, [&](std::ostream& os) { write_grid_csv(os, cells); });
        detail::write_sidecar(detail::sidecar_path(o.out, o.meta),
                              json{{"n", o.n},
                                   {"trials", o.trials},
                                   {"master_seed", o.seed},
                                   {"seed_derivation", "splitmix64(splitmix64(master ^ fnv1a(label)) + trial), "
                                                       "label = grid:<density>:<skew>"},
                                   {"rng", "mt19937_64"},
                                   {"skew_mapping", std::string(kSkewMappingDescription)},
                                   {"metric", "median over trials of sort_ops(std) / sort_ops(eds), k=auto"}});
        return 0;
    } catch (const std::exception& e) {
        err << "grid: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace eds::cli
