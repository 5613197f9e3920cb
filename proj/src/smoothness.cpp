#include "qszasz/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qszasz/errors.hpp"

namespace qszasz {

namespace {

constexpr double kRefineHalt = 1e-6;
constexpr std::size_t kPairBudget = std::size_t(1) << 26;
constexpr std::size_t kSampleBudget = std::size_t(1) << 21;
constexpr int kMaxLevels = 24;

std::vector<double> sample(const RealFn& f, double lo, double step, std::size_t count) {
    std::vector<double> v(count);
    fill(count, [&](std::size_t i) { return f(lo + static_cast<double>(i) * step); }, v.data());
    return v;
}

std::size_t count_points(double span, double step) {
    return static_cast<std::size_t>(std::floor(span / step + 1e-9)) + 1;
}

// Step sized so that delta is an exact multiple: the largest grid offset
// lands on delta itself instead of quantizing below it, which would stall
// the refinement on piecewise-linear suprema.
std::size_t aligned_offsets(double delta, double step) {
    return std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(delta / step - 1e-9)));
}

// halt once two successive halvings each moved the estimate by < 1e-6
class RefineGate {
public:
    bool settled(double value) {
        const bool small = seen_ && std::abs(value - prev_) < kRefineHalt;
        stable_ = small ? stable_ + 1 : 0;
        prev_ = value;
        seen_ = true;
        return stable_ >= 2;
    }

private:
    double prev_ = 0.0;
    bool seen_ = false;
    int stable_ = 0;
};

} // namespace

double modulus_of_continuity(const RealFn& f, double delta, const GridSpec& grid) {
    if (!(delta > 0.0)) return 0.0;
    const double span = grid.hi - grid.lo;
    std::size_t koff = aligned_offsets(delta, grid.step);
    double cur = 0.0;
    RefineGate gate;
    for (int level = 0;; ++level, koff *= 2) {
        const double step = delta / static_cast<double>(koff);
        const std::size_t nx = count_points(span, step);
        if (nx > kSampleBudget || (nx - 1) * koff > kPairBudget) break;
        const auto v = sample(f, grid.lo, step, nx);
        const std::size_t kmax = std::min(koff, nx - 1);
        cur = std::max(0.0, max_map((nx - 1) * kmax, [&](std::size_t m) {
                           const std::size_t i = m / kmax;
                           const std::size_t j = i + m % kmax + 1;
                           return j < nx ? std::abs(v[j] - v[i]) : 0.0;
                       }));
        if (gate.settled(cur) || level >= kMaxLevels) break;
    }
    return cur;
}

double second_modulus(const RealFn& f, double delta, const GridSpec& grid) {
    if (!(delta > 0.0)) return 0.0;
    const double span = grid.hi - grid.lo;
    std::size_t koff = aligned_offsets(delta, grid.step);
    double cur = 0.0;
    RefineGate gate;
    for (int level = 0;; ++level, koff *= 2) {
        const double step = delta / static_cast<double>(koff);
        const std::size_t nx = count_points(span, step);
        // h = k*step shares the x step, so x, x+h and x+2h all live on one
        // extended sample array
        if (nx + 2 * koff > kSampleBudget || nx * koff > kPairBudget) break;
        const auto v = sample(f, grid.lo, step, nx + 2 * koff);
        cur = std::max(0.0, max_map(nx * koff, [&](std::size_t m) {
                           const std::size_t i = m / koff;
                           const std::size_t k = m % koff + 1;
                           return std::abs(v[i + 2 * k] - 2.0 * v[i + k] + v[i]);
                       }));
        if (gate.settled(cur) || level >= kMaxLevels) break;
    }
    return cur;
}

bool lipschitz_check(const RealFn& f, double m, double alpha_exp, const GridSpec& grid) {
    if (!(m > 0.0)) throw PreconditionError("lipschitz_check requires M > 0");
    if (!(alpha_exp > 0.0) || alpha_exp > 1.0)
        throw PreconditionError("lipschitz_check requires 0 < alpha <= 1");
    const std::size_t nx = grid.points();
    std::vector<double> v(nx);
    fill(nx, [&](std::size_t i) { return f(grid.at(i)); }, v.data());
    const double worst = max_map(nx * nx, [&](std::size_t idx) {
        const std::size_t i = idx / nx;
        const std::size_t j = idx % nx;
        if (j <= i) return -std::numeric_limits<double>::infinity();
        const double dist = grid.at(j) - grid.at(i);
        return std::abs(v[j] - v[i]) - m * std::pow(dist, alpha_exp);
    });
    return worst <= 1e-12;
}

void BoundReport::finish() {
    min_slack = std::numeric_limits<double>::infinity();
    for (const auto& p : points) min_slack = std::min(min_slack, p.slack);
    if (points.empty()) min_slack = 0.0;
    all_pass = min_slack >= -report_tolerance;
}

namespace {

// modulus domain covering every argument the verifier touches: grid x plus
// node offsets and the target offset t
GridSpec eval_domain(const StancuOperator& op, const GridSpec& x_grid) {
    const double hi = x_grid.hi + std::max(op.node_sup(), op.params().t);
    return GridSpec(x_grid.lo, hi, x_grid.step);
}

std::vector<double> lhs_over_grid(const StancuOperator& op, const RealFn& f,
                                  const GridSpec& x_grid) {
    const std::size_t n = x_grid.points();
    const double t = op.params().t;
    std::vector<double> lhs(n);
    fill(n, [&](std::size_t i) {
        const double x = x_grid.at(i);
        return std::abs(op.apply(f, x) - f(x + t));
    }, lhs.data());
    return lhs;
}

} // namespace

BoundReport verify_pointwise_bound(const StancuOperator& op, const RealFn& f,
                                   const GridSpec& x_grid, double report_tol) {
    BoundReport rep;
    rep.id = "pointwise";
    rep.report_tolerance = report_tol;
    const double delta = op.central_moment2();
    const double rhs = 2.0 * modulus_of_continuity(f, std::sqrt(delta), eval_domain(op, x_grid));
    const auto lhs = lhs_over_grid(op, f, x_grid);
    rep.points.resize(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i)
        rep.points[i] = {x_grid.at(i), op.params().t, lhs[i], rhs, rhs - lhs[i]};
    rep.finish();
    return rep;
}

BoundReport verify_lipschitz_bound(const StancuOperator& op, const RealFn& f, double m,
                                   double alpha_exp, const GridSpec& x_grid, double report_tol) {
    if (!lipschitz_check(f, m, alpha_exp, eval_domain(op, x_grid)))
        throw PreconditionError("verify_lipschitz_bound: f is not in Lip_M(alpha) on the grid");
    BoundReport rep;
    rep.id = "lipschitz";
    rep.report_tolerance = report_tol;
    const double rhs = m * std::pow(op.central_moment2(), alpha_exp / 2.0);
    const auto lhs = lhs_over_grid(op, f, x_grid);
    rep.points.resize(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i)
        rep.points[i] = {x_grid.at(i), op.params().t, lhs[i], rhs, rhs - lhs[i]};
    rep.finish();
    return rep;
}

UniformBoundReport verify_uniform_bound(const std::vector<long>& n_list,
                                        const OperatorFactory& make, const RealFn& f, double a,
                                        double step, double report_tol) {
    UniformBoundReport rep;
    rep.report_tolerance = report_tol;
    const GridSpec tx(0.0, a, step);
    const std::size_t nt = tx.points();
    for (long n : n_list) {
        std::vector<StancuOperator> ops;
        ops.reserve(nt);
        for (std::size_t it = 0; it < nt; ++it) ops.push_back(make(n, tx.at(it)));

        UniformBoundRow row;
        row.n = n;
        row.q = ops.front().params().q.value();
        for (const auto& op : ops) {
            row.delta_direct = std::max(row.delta_direct, op.central_moment2());
            row.delta_closed_form = std::max(
                row.delta_closed_form, op.central_moment2_closed_form(ClosedFormVariant::uniform));
        }
        row.lhs = max_map(nt * nt, [&](std::size_t m) {
            const auto& op = ops[m / nt];
            const double x = tx.at(m % nt);
            return std::abs(op.apply(f, x) - f(x + op.params().t));
        });
        const GridSpec dom(0.0, a + std::max(ops.front().node_sup(), a), step);
        row.rhs = 2.0 * modulus_of_continuity(f, std::sqrt(row.delta_direct), dom);
        row.slack = row.rhs - row.lhs;
        rep.rows.push_back(row);
    }
    rep.min_slack = std::numeric_limits<double>::infinity();
    for (const auto& r : rep.rows) rep.min_slack = std::min(rep.min_slack, r.slack);
    if (rep.rows.empty()) rep.min_slack = 0.0;
    rep.all_pass = rep.min_slack >= -report_tol;
    return rep;
}

SecondModulusReport verify_second_modulus_bound(const std::vector<long>& n_list,
                                                const OperatorFactory& make, const RealFn& f,
                                                double t, const GridSpec& x_grid) {
    SecondModulusReport rep;
    std::vector<double> cs;
    for (long n : n_list) {
        const StancuOperator op = make(n, t);
        SecondModulusRow row;
        row.n = n;
        row.q = op.params().q.value();
        row.shift = op.mean_node_shift();
        row.negative_shift = row.shift < 0.0;
        const GridSpec dom = eval_domain(op, x_grid);
        const double ashift = std::abs(row.shift);
        row.omega_shift = ashift > 0.0 ? modulus_of_continuity(f, ashift, dom) : 0.0;
        row.delta_direct = op.central_moment2();
        row.omega2_sqrt_delta = second_modulus(f, std::sqrt(row.delta_direct), dom);
        row.omega2_plain_delta = second_modulus(f, row.delta_direct, dom);

        const auto lhs = lhs_over_grid(op, f, x_grid);
        row.max_lhs = *std::max_element(lhs.begin(), lhs.end());
        row.max_residual = row.max_lhs - row.omega_shift;
        // a residual the translation term already covers needs no constant
        row.c_n = row.omega2_sqrt_delta > 1e-12
                      ? std::max(row.max_residual, 0.0) / row.omega2_sqrt_delta
                      : 0.0;
        cs.push_back(row.c_n);
        rep.rows.push_back(row);
    }
    rep.empirical_c = cs.empty() ? 0.0 : *std::max_element(cs.begin(), cs.end());
    if (!cs.empty()) {
        std::vector<double> sorted = cs;
        std::sort(sorted.begin(), sorted.end());
        const double median = sorted[sorted.size() / 2];
        rep.bounded = std::isfinite(rep.empirical_c) && cs.back() <= 2.0 * median + 1e-9;
    }
    return rep;
}

} // namespace qszasz
