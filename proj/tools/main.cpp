#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

#include "ospadmm/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Online and offline spADMM runner with inequality auditor"};
    app.require_subcommand(1);

    ospadmm::CommandOptions opt;
    std::uint64_t seed = 0;
    std::string path;

    auto add_common = [&](CLI::App* sub, const char* what) {
        sub->add_option("path", path, what)->required();
        sub->add_option("--out-dir", opt.out_dir, "Directory for output files")->capture_default_str();
        sub->add_option("--tol", opt.tol, "Relative audit tolerance")->capture_default_str();
    };
    auto* run = app.add_subcommand("run", "Run one experiment from a JSON config");
    add_common(run, "Config file");
    auto* run_seed = run->add_option("--seed", seed, "Override the config seed");
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep from a JSON config");
    add_common(sweep, "Config file");
    auto* sweep_seed = sweep->add_option("--seed", seed, "Override the config seed");
    auto* audit = app.add_subcommand("audit", "Re-audit a stored trajectory.jsonl");
    add_common(audit, "Trajectory file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (run_seed->count() || sweep_seed->count()) opt.seed = seed;
    ospadmm::apply_thread_env();

    if (run->parsed()) return ospadmm::cmd_run(path, opt);
    if (sweep->parsed()) return ospadmm::cmd_sweep(path, opt);
    return ospadmm::cmd_audit(path, opt);
}
