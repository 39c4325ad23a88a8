#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz/generalized_phi.hpp"
#include "orlicz/space.hpp"

namespace orlicz::scenario {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitPass = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitVerdictFailed = 2;

struct RunOptions {
    std::optional<std::filesystem::path> out_dir;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
};

/// A validated scenario file: space, phi, optional psi, the family under
/// test, and the diagnostics to run on it.
struct Scenario {
    std::string name;
    DiscreteMeasureSpace space;
    GeneralizedPhi phi;
    std::optional<GeneralizedPhi> psi;
    FnFamily family;
    MeasurableFn limit;
    std::vector<nlohmann::json> diagnostics;
    std::filesystem::path out_dir;
    std::optional<double> tol_override;
    double tol;
    std::uint64_t seed;
};

/// Parses and validates a scenario. Throws ConfigError / PreconditionError
/// (or nlohmann::json::parse_error) on invalid input.
Scenario load_scenario(const std::filesystem::path& config_path, const RunOptions& options = {});

struct DiagnosticOutcome {
    std::string type;
    bool pass = false;
    std::string summary;
    std::vector<std::string> files;
};

struct RunResult {
    int exit_code = kExitPass;
    std::string report;
    std::string error;
    std::filesystem::path out_dir;
    std::vector<DiagnosticOutcome> outcomes;
};

/// Runs every diagnostic, writes one CSV per diagnostic plus report.txt,
/// and returns 0 (all verdicts as expected), 2 (some verdict failed) or
/// 1 (configuration error).
RunResult run_scenario(const std::filesystem::path& config_path, const RunOptions& options = {});

/// Named family generators.
FnFamily generate_family(const nlohmann::json& spec, const DiscreteMeasureSpace& space, const GeneralizedPhi& phi,
                         std::uint64_t seed);

std::string list_generators();

}  // namespace orlicz::scenario
