#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace eds::cli;

    CLI::App app{"Stratified Kruskal MST toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
    gen_cmd->add_option("--family", gen.family, "sparse|medium|dense|normal|power|clustered|grid|path")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--m", gen.m, "Edge count (random families)");
    gen_cmd->add_option("--rows", gen.rows, "Grid rows");
    gen_cmd->add_option("--cols", gen.cols, "Grid columns");
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("--out", gen.out, "Output path (default: standard output)");

    MstOptions mst;
    auto* mst_cmd = app.add_subcommand("mst", "Compute a minimum spanning forest");
    mst_cmd->add_option("--algo", mst.algo, "std|eds|heap")->check(CLI::IsMember({"std", "eds", "heap"}));
    mst_cmd->add_option("--k", mst.k, "Stratum count for eds, or 'auto'");
    mst_cmd->add_option("--seed", mst.seed, "Sampling seed for eds");
    mst_cmd->add_option("--input", mst.input, "Edge-list file")->required();
    mst_cmd->add_flag("--metrics", mst.metrics, "Emit metrics JSON on standard error");

    ValidateOptions val;
    auto* val_cmd = app.add_subcommand("validate", "Run the 12-case validation suite");
    val_cmd->add_option("--seed", val.seed, "Seed for the generated cases");
    val_cmd->add_option("--inject-fault", val.inject_fault, "Perturb computed weights (testing)")->group("");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
    bench_cmd->add_option("--trials", bench.trials, "Trials per configuration")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "Master seed");
    bench_cmd->add_option("--out", bench.out, "CSV output path (default: standard output)");
    bench_cmd->add_option("--summary", bench.summary, "Per-configuration summary CSV path");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep-k", "Sweep the stratum count k");
    sweep_cmd->add_option("--input", sweep.input, "Edge-list file (default: generated sparse n=500 m=600)");
    sweep_cmd->add_option("--k-values", sweep.k_values, "Comma-separated k values")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--trials", sweep.trials, "Timing trials per k")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sweep.seed, "Sampling seed");
    sweep_cmd->add_option("--out", sweep.out, "CSV output path");

    ProfileOptions profile;
    auto* profile_cmd = app.add_subcommand("profile", "Fraction of MST edges accepted per stratum");
    profile_cmd->add_option("--input", profile.input, "Edge-list file (default: generated n=200 m=300)");
    profile_cmd->add_option("--k", profile.k, "Stratum count")->check(CLI::PositiveNumber);
    profile_cmd->add_option("--seed", profile.seed, "Sampling seed");
    profile_cmd->add_option("--out", profile.out, "CSV output path");
    profile_cmd->add_option("--meta", profile.meta, "JSON metadata path (default: <out>.meta.json)");

    GridOptions grid;
    auto* grid_cmd = app.add_subcommand("grid", "Empirical ops-ratio grid over density and skewness");
    grid_cmd->add_option("--n", grid.n, "Vertex count")->required();
    grid_cmd->add_option("--density", grid.density, "Comma-separated densities in (0,1]")->delimiter(',')->required();
    grid_cmd->add_option("--skew", grid.skew, "Comma-separated skewness values in [0,1]")->delimiter(',')->required();
    grid_cmd->add_option("--trials", grid.trials, "Trials per cell")->check(CLI::PositiveNumber);
    grid_cmd->add_option("--seed", grid.seed, "Master seed");
    grid_cmd->add_option("--out", grid.out, "CSV output path");
    grid_cmd->add_option("--meta", grid.meta, "JSON metadata path (default: <out>.meta.json)");

    CLI11_PARSE(app, argc, argv);

    if (*gen_cmd) return cmd_gen(gen, std::cout, std::cerr);
    if (*mst_cmd) return cmd_mst(mst, std::cout, std::cerr);
    if (*val_cmd) return cmd_validate(val, std::cout, std::cerr);
    if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
    if (*sweep_cmd) return cmd_sweep_k(sweep, std::cout, std::cerr);
    if (*profile_cmd) return cmd_profile(profile, std::cout, std::cerr);
    if (*grid_cmd) return cmd_grid(grid, std::cout, std::cerr);
    return 2;
}
