#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ac/graph.hpp"
#include "commands.hpp"
#include "experiment_spec.hpp"

using namespace ac::cli;

int main(int argc, char** argv) {
    CLI::App app{"active-consensus: energy-constrained distributed average consensus simulator"};
    app.require_subcommand(1);

    GenArgs gen_args;
    int gen_n = 0;
    double gen_d = 0.0;
    auto* gen = app.add_subcommand("gen", "Generate a topology and write its edge-list file");
    gen->add_option("family", gen_args.family, "uniform|clustered|star|chain")->required();
    auto* gen_n_opt = gen->add_option("--n", gen_n, "node count");
    auto* gen_d_opt = gen->add_option("--d", gen_d, "target mean degree (uniform)");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("--out", gen_args.out_path, "output edge-list path")->required();

    std::string spec_path, out_path;
    std::optional<std::uint64_t> seed_override;
    std::uint64_t seed_value = 0;
    auto* run = app.add_subcommand("run", "Run one experiment from a spec file");
    run->add_option("--spec", spec_path, "experiment spec path")->required();
    run->add_option("--out", out_path, "results CSV path (trace lands next to it)")->required();
    auto* run_seed = run->add_option("--seed", seed_value, "override the master seed");

    std::vector<std::string> grid_flags;
    int jobs = 1;
    auto* sweep = app.add_subcommand("sweep", "Run a replicated parameter sweep");
    sweep->add_option("--spec", spec_path, "base experiment spec path")->required();
    sweep->add_option("--out", out_path, "results CSV path (aggregates land next to it)")
        ->required();
    sweep->add_option("--grid", grid_flags, "grid axis key=v1,v2,... (repeatable)")
        ->take_all()
        ->allow_extra_args(false);
    sweep->add_option("--jobs", jobs, "worker threads for replicates");
    auto* sweep_seed = sweep->add_option("--seed", seed_value, "override the master seed");

    std::string results_path;
    auto* report = app.add_subcommand("report", "Print a summary table for a results file");
    report->add_option("results", results_path, "results or aggregate CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParseError;
    }

    if (gen_n_opt->count() > 0) gen_args.n = gen_n;
    if (gen_d_opt->count() > 0) gen_args.d = gen_d;
    if (run_seed->count() > 0 || sweep_seed->count() > 0) seed_override = seed_value;

    try {
        if (gen->parsed()) return cmd_gen(gen_args);
        if (run->parsed()) return cmd_run(spec_path, out_path, seed_override);
        if (sweep->parsed()) return cmd_sweep(spec_path, out_path, grid_flags, jobs, seed_override);
        if (report->parsed()) return cmd_report(results_path);
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const ac::GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTopologyError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTopologyError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
