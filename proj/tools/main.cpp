#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orlicz/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Modular, Luxemburg norm and weak-compactness diagnostics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    double tol = 0.0;
    std::uint64_t seed = 0;
    auto* run = app.add_subcommand("run", "Run a scenario file and write CSV artifacts plus report.txt");
    run->add_option("config", config_path, "Scenario JSON file")->required();
    auto* out_opt = run->add_option("--out", out_dir, "Output directory (overrides the scenario's)");
    auto* tol_opt = run->add_option("--tol", tol, "Criterion verdict tolerance for every diagnostic");
    auto* seed_opt = run->add_option("--seed", seed, "Seed for randomized generators");

    auto* list = app.add_subcommand("list-generators", "List family generators and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : orlicz::scenario::kExitConfigError;
    }

    if (list->parsed()) {
        std::cout << orlicz::scenario::list_generators();
        return 0;
    }

    orlicz::scenario::RunOptions options;
    if (*out_opt) options.out_dir = out_dir;
    if (*tol_opt) options.tol = tol;
    if (*seed_opt) options.seed = seed;
    try {
        auto result = orlicz::scenario::run_scenario(config_path, options);
        if (result.exit_code == orlicz::scenario::kExitConfigError) {
            std::cerr << "error: " << result.error << "\n";
        } else {
            std::cout << result.report;
        }
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return orlicz::scenario::kExitConfigError;
    }
}
