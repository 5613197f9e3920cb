#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qszasz/errors.hpp"
#include "qszasz/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"q-deformed Favard-Szasz operator experiments"};
    app.require_subcommand(1);

    struct Args {
        std::string config;
        std::string out;
        double tol = 0.0;
    };

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"moments", "direct vs closed-form operator moments"},
        {"bounds", "error-bound verification suites"},
        {"statconv", "statistical convergence experiment"},
        {"sweep", "convergence sweep over n"},
        {"verify-all", "run every command into one directory"},
    };

    std::map<std::string, Args> args;
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        Args& a = args[name];
        sub->add_option("--config", a.config, "experiment config file")->required();
        sub->add_option("--out", a.out, "output CSV path (overrides the config)");
        sub->add_option("--tol", a.tol, "series truncation tolerance (overrides the config)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const Args& a = args[name];
    try {
        qszasz::ExperimentConfig cfg = qszasz::parse_config_file(a.config);
        if (!a.out.empty()) cfg.out_path = a.out;
        if (a.tol > 0.0) cfg.tol = a.tol;
        return qszasz::run_command(name, cfg);
    } catch (const qszasz::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
