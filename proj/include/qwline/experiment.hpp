#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "qwline/walk.hpp"

namespace qwline {

enum class InitialKind { localized, pair, custom };

// Outputs a run can produce; each one maps to a CSV file in the output
// directory.
enum class EmitItem { survival, entropy, variance, profile, analytic_survival, fit_report };

// Fully resolved description of one run. parse_config fills the defaults
// that depend on other fields (survival radius, fit window, recording
// cadence, snapshot times), so two configs compare equal exactly when they
// describe the same run.
struct ExperimentConfig {
    InitialKind initial = InitialKind::localized;

    // Localized start only.
    Complex alpha{0.0, 0.0};
    Complex beta{0.0, 0.0};

    // Symmetric-pair start only.
    int k = 1;
    int sign = +1;

    // Custom start only: path of the amplitude CSV.
    std::string custom_file;

    int steps = 1000;
    int survival_s = 0;
    int fit_min = 100;
    int fit_max = 1000;
    int smoothing = 32;
    int record_every = 1;
    std::vector<int> snapshot_times;
    std::set<EmitItem> emit;
    std::string out_dir = ".";
    int jobs = 1;
    bool compare = false;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Parses command-line tokens (program name excluded) into a validated,
// fully resolved config. Flags override values read via --config FILE.
// Throws CLI::ParseError for unknown or malformed flags and
// std::invalid_argument for inconsistent combinations.
ExperimentConfig parse_config(const std::vector<std::string>& args);

// Renders a config as a TOML config file. Feeding the result back through
// `--config` reproduces the config exactly.
std::string dump_config(const ExperimentConfig& cfg);

// Builds the initial condition described by the config, reading and
// validating the custom amplitude file if one is configured.
InitialCondition build_initial_condition(const ExperimentConfig& cfg);

// Runs one experiment and writes the requested CSVs under cfg.out_dir.
// Returns 0 on success or 4 if a requested fit could not be carried out
// (remaining outputs are still written). Throws IoError when the output
// directory or a file cannot be written.
int run_experiment(const ExperimentConfig& cfg);

// Runs the exact walk and the closed-form prediction side by side, writing
// compare.csv (per-time values and ratio) and compare_report.csv (fitted
// exponents and window mean ratio). Same return/throw contract as
// run_experiment.
int compare_exact_analytic(const ExperimentConfig& cfg);

// Entry point behind the command-line binary: parses args, dispatches to a
// single run, a comparison, a config dump, or a batch, and maps errors to
// exit codes (0 success, 2 configuration, 3 output I/O, 4 fit failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwline
