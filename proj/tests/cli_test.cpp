#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"

using namespace eds;
using namespace eds::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("edsmst_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class Opt, class F>
Run run(F&& cmd, const Opt& opt) {
    std::ostringstream out, err;
    const int code = cmd(opt, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

/// Runs the real binary, capturing standard output.
Run exec(const std::string& args) {
    const std::string cmd = std::string(EDSMST_EXE) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out, {}};
}

const char* kClrs =
    "# CLRS MST example\n"
    "9 14\n"
    "0 1 4\n0 7 8\n1 2 8\n1 7 11\n2 3 7\n2 5 4\n2 8 2\n"
    "3 4 9\n3 5 14\n4 5 10\n5 6 2\n6 7 1\n6 8 6\n7 8 7\n";

}  // namespace

TEST(CmdGen, GridHeader) {
    TempDir dir;
    GenOptions o;
    o.family = "grid";
    o.rows = 4;
    o.cols = 4;
    o.out = dir.file("g.txt");
    const auto r = run(cmd_gen, o);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(first_line(r.out), "16 24");
    EXPECT_EQ(first_line(read_file(o.out)), "16 24");
}

TEST(CmdGen, PathToStandardOutput) {
    GenOptions o;
    o.family = "path";
    o.n = 10;
    const auto r = run(cmd_gen, o);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "10 9");
    EXPECT_EQ(parse_edge_list(r.out).edge_count(), 9u);
}

TEST(CmdGen, InfeasibleParametersFail) {
    GenOptions o;
    o.family = "sparse";
    o.n = 10;
    o.m = 100;
    auto r = run(cmd_gen, o);
    EXPECT_NE(r.code, 0);
    EXPECT_FALSE(r.err.empty());
    o.family = "grid";
    r = run(cmd_gen, o);
    EXPECT_NE(r.code, 0);
    o.family = "hypercube";
    EXPECT_NE(run(cmd_gen, o).code, 0);
}

TEST(CmdMst, ClrsAndNegative) {
    TempDir dir;
    MstOptions o;
    o.input = dir.file("clrs.txt");
    write_file(o.input, kClrs);
    for (const char* algo : {"std", "eds", "heap"}) {
        o.algo = algo;
        const auto r = run(cmd_mst, o);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(first_line(r.out), "37.0000");
        EXPECT_NE(r.out.find("edges 8"), std::string::npos);
    }
    o.input = dir.file("neg.txt");
    write_file(o.input, "3 3\n0 1 -5\n1 2 -3\n0 2 -1\n");
    o.algo = "std";
    EXPECT_EQ(first_line(run(cmd_mst, o).out), "-8.0000");
}

TEST(CmdMst, MetricsJson) {
    TempDir dir;
    MstOptions o;
    o.input = dir.file("clrs.txt");
    write_file(o.input, kClrs);
    o.metrics = true;
    o.k = "3";
    const auto r = run(cmd_mst, o);
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.err);
    for (const char* key : {"sort_ops", "strata_processed", "strata_total", "phase1_ns", "phase2_ns", "phase3_ns",
                            "union_calls"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_LE(j["sort_ops"].get<std::size_t>(), 14u);
    EXPECT_LE(j["strata_processed"].get<std::size_t>(), j["strata_total"].get<std::size_t>());
}

TEST(CmdMst, Errors) {
    TempDir dir;
    MstOptions o;
    o.input = dir.file("missing.txt");
    auto r = run(cmd_mst, o);
    EXPECT_NE(r.code, 0);

    o.input = dir.file("bad.txt");
    write_file(o.input, "3 2\n0 1 1.0\n1 2 oops\n");
    r = run(cmd_mst, o);
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

    write_file(o.input, "3 1\n0 1 1\n");
    o.k = "0";
    EXPECT_NE(run(cmd_mst, o).code, 0);
    o.k = "many";
    EXPECT_NE(run(cmd_mst, o).code, 0);
}

TEST(CmdMst, RoundTripStdEqualsEdsForAllFamilies) {
    TempDir dir;
    for (const char* fam : {"sparse", "medium", "dense", "normal", "power", "clustered", "grid", "path"}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GenOptions g;
            g.family = fam;
            g.n = 60;
            g.rows = 6;
            g.cols = 9;
            g.seed = seed;
            g.out = dir.file("g.txt");
            ASSERT_EQ(run(cmd_gen, g).code, 0);
            MstOptions m;
            m.input = g.out;
            m.seed = seed;
            m.algo = "std";
            const auto a = run(cmd_mst, m);
            m.algo = "eds";
            const auto b = run(cmd_mst, m);
            m.k = "1";
            const auto c = run(cmd_mst, m);
            ASSERT_EQ(a.code, 0);
            EXPECT_EQ(a.out, b.out) << fam << " seed " << seed;
            EXPECT_EQ(a.out, c.out) << fam << " seed " << seed;
        }
    }
}

TEST(CmdValidate, PassesAndDetectsFaults) {
    auto r = run(cmd_validate, ValidateOptions{});
    EXPECT_EQ(r.code, 0) << r.out;
    std::size_t pass_lines = 0, pos = 0;
    while ((pos = r.out.find("PASS", pos)) != std::string::npos) ++pass_lines, ++pos;
    EXPECT_EQ(pass_lines, 36u);

    ValidateOptions faulty;
    faulty.inject_fault = 1e-3;
    r = run(cmd_validate, faulty);
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(CmdSweepK, DefaultGraph) {
    SweepOptions o;
    o.trials = 1;
    const auto r = run(cmd_sweep_k, o);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
}

TEST(CmdProfile, WritesCsvAndSidecar) {
    TempDir dir;
    ProfileOptions o;
    o.out = dir.file("profile.csv");
    const auto r = run(cmd_profile, o);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = read_file(o.out);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
    const auto meta = nlohmann::json::parse(read_file(o.out + ".meta.json"));
    EXPECT_EQ(meta["k"], 7);
    EXPECT_EQ(meta["seed"], 1);
}

TEST(CmdGrid, WritesCsvAndSidecar) {
    TempDir dir;
    GridOptions o;
    o.n = 60;
    o.density = {0.01, 0.5};
    o.skew = {0.0, 0.5};
    o.trials = 1;
    o.out = dir.file("grid.csv");
    const auto r = run(cmd_grid, o);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = read_file(o.out);
    EXPECT_EQ(first_line(csv), "density,skew,alpha,m,ops_ratio,status");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
    const auto meta = nlohmann::json::parse(read_file(o.out + ".meta.json"));
    EXPECT_TRUE(meta.contains("skew_mapping"));
    EXPECT_EQ(meta["master_seed"], 1);

    o.density = {1.5};
    EXPECT_NE(run(cmd_grid, o).code, 0);
}

TEST(Binary, EndToEnd) {
    TempDir dir;
    const auto g = dir.file("grid.txt");
    auto r = exec("gen --family grid --rows 4 --cols 4 --seed 1 --out " + g);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "16 24");

    const auto clrs = dir.file("clrs.txt");
    write_file(clrs, kClrs);
    r = exec("mst --algo eds --input " + clrs);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "37.0000");
    const auto eds_k1 = exec("mst --algo eds --k 1 --input " + g);
    const auto std_run = exec("mst --algo std --input " + g);
    EXPECT_EQ(eds_k1.out, std_run.out);

    EXPECT_NE(exec("mst --algo bogus --input " + clrs).code, 0);
    EXPECT_NE(exec("mst --input " + dir.file("nope.txt")).code, 0);

    r = exec("sweep-k --k-values 2,5,10,20,50,100,200,500 --trials 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);

    r = exec("profile --k 7 --seed 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
}

TEST(Binary, BenchWritesFullCsv) {
    TempDir dir;
    const auto out = dir.file("results.csv");
    const auto r = exec("bench --trials 3 --out " + out);
    ASSERT_EQ(r.code, 0);
    const auto csv = read_file(out);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 127);
}
