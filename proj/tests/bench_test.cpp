#include <numeric>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "eds/bench.hpp"
#include "eds/validation.hpp"

using namespace eds;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const std::vector<BenchRecord>& suite_records() {
    static const auto records = run_suite(default_suite(), 3, 1);
    return records;
}

}  // namespace

TEST(Seeds, DerivationIsStableAndDecorrelated) {
    EXPECT_EQ(derive_seed(1, "Dense", 0), derive_seed(1, "Dense", 0));
    std::set<std::uint64_t> seen;
    for (const auto& c : default_suite())
        for (std::uint64_t t = 0; t < 3; ++t) seen.insert(derive_seed(1, c.label, t));
    EXPECT_EQ(seen.size(), 42u);
    EXPECT_NE(derive_seed(1, "Dense", 0), derive_seed(2, "Dense", 0));
}

TEST(Median, OddAndEven) {
    EXPECT_DOUBLE_EQ(median(std::vector<int>{3, 1, 2}), 2.0);
    EXPECT_DOUBLE_EQ(median(std::vector<int>{4, 1, 2, 3}), 2.5);
}

TEST(RunSuite, DefaultSuiteShape) {
    const auto configs = default_suite();
    ASSERT_EQ(configs.size(), 14u);
    const auto& records = suite_records();
    ASSERT_EQ(records.size(), 126u);
    for (const auto& c : configs) {
        const auto g = c.generate(7);
        EXPECT_EQ(g.vertex_count(), c.n) << c.label;
        EXPECT_EQ(g.edge_count(), c.m) << c.label;
    }
}

TEST(RunSuite, RecordInvariants) {
    const auto& records = suite_records();
    for (std::size_t i = 0; i < records.size(); i += 3) {
        const auto& s = records[i];
        const auto& e = records[i + 1];
        const auto& h = records[i + 2];
        ASSERT_EQ(s.algo, Algorithm::Std);
        ASSERT_EQ(e.algo, Algorithm::Eds);
        ASSERT_EQ(h.algo, Algorithm::Heap);
        ASSERT_EQ(s.seed, e.seed);
        ASSERT_EQ(s.seed, h.seed);
        ASSERT_TRUE(weight_equal(s.mst_weight, e.mst_weight)) << s.graph_label;
        ASSERT_TRUE(weight_equal(s.mst_weight, h.mst_weight)) << s.graph_label;
        for (const auto* r : {&s, &e, &h}) {
            ASSERT_LE(r->sort_ops, r->m);
            ASSERT_LE(r->strata_processed, r->strata_total);
            ASSERT_EQ(r->mst_edges, r->n - 1);
        }
        ASSERT_EQ(s.sort_ops, s.m);
    }
}

TEST(RunSuite, DenseAndPathConfigurations) {
    for (const auto& r : suite_records()) {
        if (r.algo != Algorithm::Eds) continue;
        if (r.graph_label == "Dense") {
            EXPECT_LE(r.strata_processed, 6u);
            EXPECT_LE(r.sort_ops, 4000u);
        }
        if (r.graph_label == "Path n=2000") {
            EXPECT_EQ(r.sort_ops, r.m);
            EXPECT_EQ(r.strata_processed, r.strata_total);
        }
    }
}

TEST(RunSuite, CsvHeaderAndRowCount) {
    std::ostringstream out;
    write_bench_csv(out, suite_records());
    const auto text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "graph,family,n,m,algo,trial,seed,time_ns,sort_ops,strata_processed,strata_total,mst_weight,mst_edges");
    EXPECT_EQ(count_lines(text), 127u);
}

TEST(RunSuite, SummaryRatios) {
    const auto summary = summarize(suite_records());
    ASSERT_EQ(summary.size(), 14u);
    for (const auto& s : summary) {
        EXPECT_GE(s.ops_ratio, 1.0) << s.graph_label;
        EXPECT_DOUBLE_EQ(s.ops_std, static_cast<double>(s.m));
    }
    EXPECT_EQ(summary[6].graph_label, "Dense");
    EXPECT_GE(summary[6].ops_ratio, 10.0);
}

TEST(RunSuite, RejectsZeroTrials) { EXPECT_THROW(run_suite(default_suite(), 0), std::invalid_argument); }

TEST(RunSuite, GenerationFailureCarriesContext) {
    std::vector<BenchConfig> bad{{"Broken", Family::Sparse, 10, 5, 0, 0}};
    try {
        run_suite(bad, 1);
        FAIL() << "expected failure";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("Broken"), std::string::npos);
    }
}

TEST(SweepK, Examples) {
    const auto g = gen_random(500, 600, WeightDist::uniform(), 1);
    const std::vector<std::size_t> ks{2, 5, 10, 20, 50, 100, 200, 500};
    const auto rows = sweep_k(g, ks, 2);
    ASSERT_EQ(rows.size(), 8u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].k, ks[i]);
        EXPECT_LE(rows[i].sort_ops, 600u);
    }
    EXPECT_EQ(sweep_k(g, {1}, 1)[0].sort_ops, 600u);

    // k = m: deduplication caps the stratum count at the number of distinct
    // weights (plus an empty lowest bucket when the minimum weight repeats).
    const Graph tiny(3, {{0, 1, 1, 0}, {1, 2, 2, 0}, {0, 2, 2, 0}});
    EXPECT_LE(sweep_k(tiny, {3}, 1)[0].strata_total, 2u);
    const Graph tied_min(3, {{0, 1, 1, 0}, {1, 2, 1, 0}, {0, 2, 2, 0}});
    const auto tied = sweep_k(tied_min, {3}, 1)[0];
    EXPECT_EQ(tied.strata_total, 3u);
    EXPECT_LE(tied.strata_nonempty, 2u);
    EXPECT_THROW(sweep_k(g, {}, 1), std::invalid_argument);
    EXPECT_THROW(sweep_k(g, {0}, 1), std::invalid_argument);
}

TEST(StrataProfile, Examples) {
    const auto g = gen_random(200, 300, WeightDist::uniform(), 3);
    const auto p = strata_profile(g, 7, 3);
    ASSERT_EQ(p.stratum_fractions.size(), 7u);
    EXPECT_NEAR(std::accumulate(p.stratum_fractions.begin(), p.stratum_fractions.end(), 0.0), 1.0, 1e-9);
    for (double f : p.stratum_fractions) EXPECT_GE(f, 0.0);
    EXPECT_EQ(std::accumulate(p.accepted.begin(), p.accepted.end(), std::size_t{0}), 199u);

    const auto one = strata_profile(g, 1, 3);
    EXPECT_EQ(one.stratum_fractions, std::vector<double>{1.0});

    const auto forest = strata_profile(disconnected_graph(), 2, 1);
    EXPECT_NEAR(std::accumulate(forest.stratum_fractions.begin(), forest.stratum_fractions.end(), 0.0), 1.0, 1e-12);
}

TEST(StrataProfile, SumsToOneOnConnectedGraphs) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = gen_random(100 + seed * 10, 400 + seed * 50, WeightDist::clustered(), seed);
        const auto p = strata_profile(g, 2 + seed, seed);
        EXPECT_NEAR(std::accumulate(p.stratum_fractions.begin(), p.stratum_fractions.end(), 0.0), 1.0, 1e-9);
    }
}

TEST(SpeedupGrid, Examples) {
    const auto dense = speedup_grid({0.9}, {0.0}, 300, 1);
    ASSERT_EQ(dense.size(), 1u);
    EXPECT_GE(dense[0].ops_ratio, 5.0);

    const std::size_t n = 300;
    const double tree_density = static_cast<double>(n - 1) / (n * (n - 1) / 2.0);
    for (double sigma : {0.0, 0.5, 1.0}) {
        const auto cell = speedup_grid({tree_density}, {sigma}, n, 2);
        ASSERT_FALSE(cell[0].skipped);
        EXPECT_EQ(cell[0].m, n - 1);
        EXPECT_NEAR(cell[0].ops_ratio, 1.0, 1e-12);
    }
    EXPECT_TRUE(speedup_grid({}, {}, 100, 1).empty());
    EXPECT_TRUE(speedup_grid({0.5}, {}, 100, 1).empty());
}

TEST(SpeedupGrid, SkipsInfeasibleCells) {
    const auto cells = speedup_grid({0.001, 0.5}, {0.0, 1.0}, 100, 1);
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_TRUE(cells[0].skipped);
    EXPECT_TRUE(cells[1].skipped);
    EXPECT_FALSE(cells[2].skipped);
    std::ostringstream out;
    write_grid_csv(out, cells);
    EXPECT_NE(out.str().find("skipped"), std::string::npos);
}

TEST(SpeedupGrid, SkewMapping) {
    EXPECT_EQ(skew_distribution(0.0).kind(), WeightDist::Kind::Uniform);
    EXPECT_DOUBLE_EQ(skew_distribution(0.45).pareto_alpha(), 1.0);
    EXPECT_DOUBLE_EQ(skew_distribution(1.0).pareto_alpha(), 1.0 / 2.1);
    EXPECT_THROW(speedup_grid({0.0}, {0.0}, 10, 1), std::invalid_argument);
    EXPECT_THROW(speedup_grid({0.5}, {1.5}, 10, 1), std::invalid_argument);
}
