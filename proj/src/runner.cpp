#include "qszasz/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "qszasz/csv.hpp"
#include "qszasz/errors.hpp"
#include "qszasz/functions.hpp"
#include "qszasz/smoothness.hpp"

namespace qszasz {

namespace {

std::string kernel_label(const std::vector<double>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ';';
        out += csv_double(coeffs[i]);
    }
    return out;
}

StancuOperator make_operator(const ExperimentConfig& cfg, long n, double t) {
    OperatorParams p{n,
                     t,
                     cfg.alpha,
                     cfg.beta,
                     QValue(cfg.q_at(n)),
                     cfg.kernel(),
                     cfg.relax_stancu};
    return StancuOperator(std::move(p), cfg.tol);
}

std::string out_or_default(const ExperimentConfig& cfg, const char* fallback) {
    return cfg.out_path.empty() ? fallback : cfg.out_path;
}

bool has_section(const ExperimentConfig& cfg, const char* name) {
    return std::find(cfg.theorems.begin(), cfg.theorems.end(), name) != cfg.theorems.end();
}

} // namespace

int run_moments(const ExperimentConfig& cfg) {
    CsvWriter csv(out_or_default(cfg, "moments.csv"));
    csv.row({"v", "n", "q", "t", "x", "alpha", "beta", "A", "direct", "closed_form", "abs_diff",
             "central2_direct", "central2_pointwise_form", "central2_uniform_form",
             "central2_match"});
    const std::string kern = kernel_label(cfg.a_coeffs);
    const GridSpec xg = cfg.x_grid();
    bool ok = true;
    for (long n : cfg.n_list) {
        for (double t : cfg.t_list) {
            const StancuOperator op = make_operator(cfg, n, t);
            const double c2 = op.central_moment2();
            const double c2p = op.central_moment2_closed_form(ClosedFormVariant::pointwise);
            const double c2u = op.central_moment2_closed_form(ClosedFormVariant::uniform);
            const bool mp = std::abs(c2 - c2p) <= cfg.moment_tol;
            const bool mu = std::abs(c2 - c2u) <= cfg.moment_tol;
            const char* match = mp && mu ? "both" : mp ? "pointwise" : mu ? "uniform" : "none";
            for (int v = 0; v <= 2; ++v) {
                for (std::size_t i = 0; i < xg.points(); ++i) {
                    const MomentReport rep = op.moment_report(v, xg.at(i));
                    // the order-two closed form is comparison-only
                    if (v <= 1 && rep.abs_diff > cfg.moment_tol) ok = false;
                    csv.row({csv_long(v), csv_long(n), csv_double(op.params().q.value()),
                             csv_double(t), csv_double(rep.x), csv_double(cfg.alpha),
                             csv_double(cfg.beta), kern, csv_double(rep.direct),
                             csv_double(rep.closed_form), csv_double(rep.abs_diff),
                             csv_double(c2), csv_double(c2p), csv_double(c2u), match});
                }
            }
        }
    }
    return ok ? 0 : 1;
}

int run_bounds(const ExperimentConfig& cfg) {
    CsvWriter csv(out_or_default(cfg, "bounds.csv"));
    csv.row({"section", "f", "n", "q", "t", "x", "lhs", "rhs", "slack", "delta_direct",
             "delta_closed_form", "shift", "omega_shift", "omega2_sqrt_delta",
             "omega2_plain_delta", "max_residual", "c_n", "empirical_c", "bounded",
             "negative_shift"});
    const GridSpec xg = cfg.x_grid();
    bool gate = true;

    if (has_section(cfg, "pointwise")) {
        for (const auto& fname : cfg.functions) {
            const RealFn f = make_named_function(fname);
            for (long n : cfg.n_list) {
                for (double t : cfg.t_list) {
                    const StancuOperator op = make_operator(cfg, n, t);
                    const BoundReport rep = verify_pointwise_bound(op, f, xg, cfg.report_tol);
                    gate = gate && rep.all_pass;
                    for (const auto& pt : rep.points)
                        csv.row({"pointwise", fname, csv_long(n),
                                 csv_double(op.params().q.value()), csv_double(pt.t),
                                 csv_double(pt.x), csv_double(pt.lhs), csv_double(pt.rhs),
                                 csv_double(pt.slack), csv_double(op.central_moment2()), "", "", "",
                                 "", "", "", "", "", "", ""});
                }
            }
        }
    }

    if (has_section(cfg, "uniform")) {
        for (const auto& fname : cfg.functions) {
            const RealFn f = make_named_function(fname);
            const auto rep = verify_uniform_bound(
                cfg.n_list, [&](long n, double t) { return make_operator(cfg, n, t); }, f, cfg.a,
                cfg.x_step, cfg.report_tol);
            for (const auto& row : rep.rows)
                csv.row({"uniform", fname, csv_long(row.n), csv_double(row.q), "", "",
                         csv_double(row.lhs), csv_double(row.rhs), csv_double(row.slack),
                         csv_double(row.delta_direct), csv_double(row.delta_closed_form), "", "",
                         "", "", "", "", "", "", ""});
        }
    }

    if (has_section(cfg, "lipschitz")) {
        for (const auto& ls : cfg.lip_functions) {
            const RealFn f = make_named_function(ls.name);
            for (long n : cfg.n_list) {
                for (double t : cfg.t_list) {
                    const StancuOperator op = make_operator(cfg, n, t);
                    const BoundReport rep =
                        verify_lipschitz_bound(op, f, ls.m, ls.alpha_exp, xg, cfg.report_tol);
                    gate = gate && rep.all_pass;
                    for (const auto& pt : rep.points)
                        csv.row({"lipschitz", ls.name, csv_long(n),
                                 csv_double(op.params().q.value()), csv_double(pt.t),
                                 csv_double(pt.x), csv_double(pt.lhs), csv_double(pt.rhs),
                                 csv_double(pt.slack), csv_double(op.central_moment2()), "", "", "",
                                 "", "", "", "", "", "", ""});
                }
            }
        }
    }

    if (has_section(cfg, "second-modulus")) {
        for (const auto& fname : cfg.functions) {
            const RealFn f = make_named_function(fname);
            const auto rep = verify_second_modulus_bound(
                cfg.n_list, [&](long n, double t) { return make_operator(cfg, n, t); }, f,
                cfg.t_list.front(), xg);
            for (const auto& row : rep.rows)
                csv.row({"second-modulus", fname, csv_long(row.n), csv_double(row.q),
                         csv_double(cfg.t_list.front()), "", csv_double(row.max_lhs), "", "",
                         csv_double(row.delta_direct), "", csv_double(row.shift),
                         csv_double(row.omega_shift), csv_double(row.omega2_sqrt_delta),
                         csv_double(row.omega2_plain_delta), csv_double(row.max_residual),
                         csv_double(row.c_n), csv_double(rep.empirical_c),
                         rep.bounded ? "1" : "0", row.negative_shift ? "1" : "0"});
        }
    }

    return gate ? 0 : 1;
}

int run_statconv(const ExperimentConfig& cfg) {
    CsvWriter csv(out_or_default(cfg, "statconv.csv"));
    QSequence qs = cfg.q_kind == "custom"
                       ? QSequence::custom(cfg.q_values)
                       : QSequence::make(cfg.q_kind == "one_minus_inv"
                                             ? QSequenceKind::one_minus_inv
                                             : QSequenceKind::ratio,
                                         cfg.horizon);
    if (!cfg.uses_sequence())
        throw ConfigError("statconv requires a q_kind (a sequence, not a fixed q)");

    const KorovkinTable table = korovkin_experiment(qs, cfg.a, cfg.x_step, cfg.alpha, cfg.beta,
                                                    cfg.kernel(), cfg.n_list, cfg.tol, cfg.eps);
    csv.row({"table", "n", "q_n", "q_int", "e0", "e1", "e2", "bound1", "bound2", "inv_denom",
             "ratio1", "ratio2"});
    for (const auto& r : table.rows)
        csv.row({"korovkin", csv_long(r.n), csv_double(r.q_n), csv_double(r.q_int),
                 csv_double(r.e0), csv_double(r.e1), csv_double(r.e2), csv_double(r.bound1),
                 csv_double(r.bound2), csv_double(r.inv_denom), csv_double(r.ratio1),
                 csv_double(r.ratio2)});

    csv.row({"table", "v", "k", "density"});
    for (std::size_t v = 0; v < table.e_exceedance.size(); ++v) {
        const auto& prof = table.e_exceedance[v];
        for (std::size_t k = 0; k < prof.prefix.size(); ++k)
            csv.row({"ev_exceedance", csv_long(static_cast<long>(v)),
                     csv_long(static_cast<long>(k + 1)), csv_double(prof.prefix[k])});
    }

    const auto adm = qs.check(cfg.eps);
    csv.row({"table", "b", "admissible"});
    csv.row({"admissibility", csv_double(adm.b), adm.admissible ? "1" : "0"});

    const long stride = std::max<long>(1, cfg.horizon / 200);
    csv.row({"table", "n", "density"});
    for (long n = stride; n <= adm.q_exceedance.horizon; n += stride)
        csv.row({"q_exceedance", csv_long(n),
                 csv_double(adm.q_exceedance.prefix[static_cast<std::size_t>(n - 1)])});
    for (long n = stride; n <= adm.qn_exceedance.horizon; n += stride)
        csv.row({"qn_exceedance", csv_long(n),
                 csv_double(adm.qn_exceedance.prefix[static_cast<std::size_t>(n - 1)])});

    // canonical counterexample: the squares have density zero without the
    // indicator sequence converging
    const DensityProfile squares = prefix_density(
        [](long k) {
            const long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(k))));
            return r * r == k;
        },
        cfg.horizon);
    for (long n = stride; n <= squares.horizon; n += stride)
        csv.row({"square_density", csv_long(n),
                 csv_double(squares.prefix[static_cast<std::size_t>(n - 1)])});
    return 0;
}

int run_sweep(const ExperimentConfig& cfg) {
    CsvWriter csv(out_or_default(cfg, "sweep.csv"));
    csv.row({"n", "q", "t", "f", "central2_direct", "central2_pointwise_form",
             "central2_uniform_form", "sup_err", "pointwise_rhs"});
    const GridSpec xg = cfg.x_grid();
    const std::string fname = cfg.functions.front();
    const RealFn f = make_named_function(fname);
    for (long n : cfg.n_list) {
        for (double t : cfg.t_list) {
            const StancuOperator op = make_operator(cfg, n, t);
            const double c2 = op.central_moment2();
            double sup_err = 0.0;
            for (std::size_t i = 0; i < xg.points(); ++i) {
                const double x = xg.at(i);
                sup_err = std::max(sup_err, std::abs(op.apply(f, x) - f(x + t)));
            }
            const BoundReport rep = verify_pointwise_bound(op, f, xg, cfg.report_tol);
            const double rhs = rep.points.empty() ? 0.0 : rep.points.front().rhs;
            csv.row({csv_long(n), csv_double(op.params().q.value()), csv_double(t), fname,
                     csv_double(c2),
                     csv_double(op.central_moment2_closed_form(ClosedFormVariant::pointwise)),
                     csv_double(op.central_moment2_closed_form(ClosedFormVariant::uniform)),
                     csv_double(sup_err), csv_double(rhs)});
        }
    }
    return 0;
}

int run_verify_all(const ExperimentConfig& cfg) {
    const std::string dir = cfg.out_path.empty() ? "verify_all_out" : cfg.out_path;
    std::filesystem::create_directories(dir);
    int worst = 0;
    const auto with_out = [&](const char* leaf) {
        ExperimentConfig sub = cfg;
        sub.command.clear();
        sub.out_path = dir + "/" + leaf;
        return sub;
    };
    worst = std::max(worst, run_moments(with_out("moments.csv")));
    worst = std::max(worst, run_bounds(with_out("bounds.csv")));
    if (cfg.uses_sequence()) worst = std::max(worst, run_statconv(with_out("statconv.csv")));
    worst = std::max(worst, run_sweep(with_out("sweep.csv")));
    return worst;
}

int run_command(const std::string& command, ExperimentConfig cfg) {
    if (!cfg.command.empty() && cfg.command != command)
        throw ConfigError("config names command '" + cfg.command + "' but '" + command +
                          "' was requested");
    if (command == "moments") return run_moments(cfg);
    if (command == "bounds") return run_bounds(cfg);
    if (command == "statconv") return run_statconv(cfg);
    if (command == "sweep") return run_sweep(cfg);
    if (command == "verify-all") return run_verify_all(cfg);
    throw ConfigError("unknown command '" + command + "'");
}

} // namespace qszasz
