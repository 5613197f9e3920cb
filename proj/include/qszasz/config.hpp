#ifndef QSZASZ_CONFIG_HPP
#define QSZASZ_CONFIG_HPP

#include <string>
#include <vector>

#include "qszasz/grid_eval.hpp"
#include "qszasz/statconv.hpp"

namespace qszasz {

struct LipFunctionSpec {
    std::string name;
    double m = 1.0;
    double alpha_exp = 1.0;
    bool operator==(const LipFunctionSpec&) const = default;
};

/// Flat key = value experiment description. Everything an invocation needs is
/// in the file, so a config plus a command line is fully reproducible.
struct ExperimentConfig {
    std::string command; // optional; must match the CLI subcommand when set
    std::vector<long> n_list{10};
    std::vector<double> t_list{0.25};
    double alpha = 0.0;
    double beta = 0.0;
    double q = 0.0;     // fixed deformation parameter; 0 means "use q_kind"
    std::string q_kind; // ratio | one_minus_inv | custom
    std::vector<double> q_values;
    std::vector<double> a_coeffs{1.0};
    std::vector<std::string> functions{"sin"};
    std::vector<LipFunctionSpec> lip_functions;
    std::vector<std::string> theorems{"pointwise", "uniform", "lipschitz", "second-modulus"};
    double x_lo = 0.0;
    double x_hi = 0.5;
    double x_step = 0.05;
    double a = 0.5;
    double tol = 1e-12;        // series / weight truncation
    double moment_tol = 1e-8;  // closed-form vs direct moment gate
    double report_tol = 1e-9;  // bound-report slack gate
    double eps = 0.01;         // exceedance threshold for density profiles
    long horizon = 10000;
    std::string out_path;
    bool relax_stancu = false;

    bool operator==(const ExperimentConfig&) const = default;

    /// Resolve the deformation parameter for index n (fixed value or
    /// sequence kind).
    double q_at(long n) const;
    bool uses_sequence() const { return !q_kind.empty(); }
    GridSpec x_grid() const { return GridSpec(x_lo, x_hi, x_step); }
    PowerSeries kernel() const { return PowerSeries(a_coeffs); }
};

/// Parses and validates; throws ConfigError with "<name>:<line>: ..." on any
/// malformed or inconsistent entry.
ExperimentConfig parse_config_text(const std::string& text, const std::string& name);
ExperimentConfig parse_config_file(const std::string& path);

/// Canonical text form; parse_config_text(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& c);

} // namespace qszasz

#endif
