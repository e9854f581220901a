#pragma once

// Twelve-case correctness suite run against all three Kruskal variants.
// Fixed cases check an exact weight; generated cases check agreement with
// the Prim oracle.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "eds/generators.hpp"
#include "eds/graph.hpp"
#include "eds/mst.hpp"
#include "eds/oracle.hpp"

namespace eds {

struct ValidationCase {
    std::string name;
    Graph graph;
    std::optional<double> expected_weight;  // nullopt: compare against prim_dense
};

/// Nine-vertex, fourteen-edge graph from the standard textbook MST figure
/// (vertices a..i mapped to 0..8). MST weight 37.
inline Graph clrs_graph() {
    return Graph(9, {
                        {0, 1, 4, 0},  {0, 7, 8, 0},  {1, 2, 8, 0},  {1, 7, 11, 0}, {2, 3, 7, 0},
                        {2, 5, 4, 0},  {2, 8, 2, 0},  {3, 4, 9, 0},  {3, 5, 14, 0}, {4, 5, 10, 0},
                        {5, 6, 2, 0},  {6, 7, 1, 0},  {6, 8, 6, 0},  {7, 8, 7, 0},
                    });
}

inline Graph triangle_graph() { return Graph(3, {{0, 1, 1, 0}, {1, 2, 2, 0}, {0, 2, 3, 0}}); }

inline Graph disconnected_graph() { return Graph(4, {{0, 1, 3, 0}, {2, 3, 5, 0}}); }

inline Graph duplicate_edges_graph() { return Graph(2, {{0, 1, 2, 0}, {0, 1, 5, 0}, {0, 1, 7, 0}}); }

inline Graph negative_triangle_graph() { return Graph(3, {{0, 1, -5, 0}, {1, 2, -3, 0}, {0, 2, -1, 0}}); }

inline Graph complete_equal_graph(std::size_t n = 5) {
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b, 1.0, 0});
    return Graph(n, std::move(edges));
}

inline std::vector<ValidationCase> validation_cases(std::uint64_t seed = 42) {
    std::vector<ValidationCase> cases;
    cases.push_back({"CLRS textbook example", clrs_graph(), 37.0});
    cases.push_back({"Triangle", triangle_graph(), 3.0});
    cases.push_back({"Disconnected (forest)", disconnected_graph(), 8.0});
    cases.push_back({"Single vertex", Graph(1), 0.0});
    cases.push_back({"Duplicate edges", duplicate_edges_graph(), 2.0});
    cases.push_back({"Negative weights", negative_triangle_graph(), -8.0});
    cases.push_back({"Path n=10", gen_path(10, WeightDist::uniform(), seed), std::nullopt});
    cases.push_back({"Grid 4x4", gen_grid(4, 4, WeightDist::uniform(), seed + 1), std::nullopt});
    cases.push_back({"Random sparse n=50", gen_random(50, 80, WeightDist::uniform(), seed + 2), std::nullopt});
    cases.push_back({"Dense n=50", gen_random(50, 1225, WeightDist::uniform(), seed + 3), std::nullopt});
    cases.push_back({"Random n=200", gen_random(200, 400, WeightDist::uniform(), seed + 4), std::nullopt});
    cases.push_back({"Equal weights", complete_equal_graph(5), 4.0});
    return cases;
}

struct ValidationOutcome {
    std::string case_name;
    Algorithm algo;
    std::size_t n = 0, m = 0;
    double weight = 0;
    double expected = 0;
    bool pass = false;
};

struct ValidationOptions {
    std::uint64_t seed = 42;
    // Test hook: added to every computed weight before comparison.
    double weight_perturbation = 0.0;
};

inline std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", w);
    return buf;
}

inline std::vector<ValidationOutcome> run_validation(const ValidationOptions& opt = {}) {
    std::vector<ValidationOutcome> out;
    for (const auto& c : validation_cases(opt.seed)) {
        const std::size_t forest_edges = c.graph.vertex_count() - component_count(c.graph);
        double expected = 0.0;
        std::size_t expected_edges = forest_edges;
        if (c.expected_weight) {
            expected = *c.expected_weight;
        } else {
            const auto oracle = prim_dense(c.graph);
            expected = oracle.total_weight;
            expected_edges = oracle.accepted_count();
        }
        for (auto algo : {Algorithm::Std, Algorithm::Eds, Algorithm::Heap}) {
            const auto r = run_mst(algo, c.graph, StrataParams::automatic(opt.seed));
            ValidationOutcome o{c.name, algo, c.graph.vertex_count(), c.graph.edge_count(),
                                r.total_weight + opt.weight_perturbation, expected, false};
            const bool count_ok = r.accepted_count() == expected_edges && r.accepted_count() == forest_edges;
            if (c.expected_weight)
                o.pass = count_ok && format_weight(o.weight) == format_weight(expected) && weight_equal(expected, o.weight);
            else
                o.pass = count_ok && weight_equal(expected, o.weight);
            out.push_back(o);
        }
    }
    return out;
}

}  // namespace eds
