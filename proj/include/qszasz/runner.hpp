#ifndef QSZASZ_RUNNER_HPP
#define QSZASZ_RUNNER_HPP

#include <string>

#include "qszasz/config.hpp"

namespace qszasz {

// Each command writes one deterministic CSV to cfg.out_path (or a default
// named after the command) and returns its exit code: 0 on pass, 1 on a
// verification failure. Config problems throw ConfigError, mapped to exit
// code 2 by the CLI.

int run_moments(const ExperimentConfig& cfg);
int run_bounds(const ExperimentConfig& cfg);
int run_statconv(const ExperimentConfig& cfg);
int run_sweep(const ExperimentConfig& cfg);

/// Runs all four into a directory (out_path, default "verify_all_out").
int run_verify_all(const ExperimentConfig& cfg);

/// Dispatch by subcommand name; rejects a config whose command key names a
/// different subcommand.
int run_command(const std::string& command, ExperimentConfig cfg);

} // namespace qszasz

#endif
