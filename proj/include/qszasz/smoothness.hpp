#ifndef QSZASZ_SMOOTHNESS_HPP
#define QSZASZ_SMOOTHNESS_HPP

#include <functional>
#include <string>
#include <vector>

#include "qszasz/grid_eval.hpp"
#include "qszasz/operators.hpp"

namespace qszasz {

/// Grid estimate of sup_{|x-y|<=delta} |f(x)-f(y)| over [grid.lo, grid.hi].
/// Converges to the modulus from below under step halving; the loop halts
/// when two successive halvings move the value by less than 1e-6, or when
/// the next level would exceed the pair budget.
double modulus_of_continuity(const RealFn& f, double delta, const GridSpec& grid);

/// Grid estimate of sup_{0<h<=delta} sup_x |f(x+2h) - 2f(x+h) + f(x)| with x
/// ranging over [grid.lo, grid.hi]; same refinement contract as above.
double second_modulus(const RealFn& f, double delta, const GridSpec& grid);

/// True iff |f(x)-f(y)| <= m |x-y|^alpha_exp holds on all grid pairs with
/// slack no worse than -1e-12.
bool lipschitz_check(const RealFn& f, double m, double alpha_exp, const GridSpec& grid);

struct BoundPoint {
    double x = 0.0;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
};

struct BoundReport {
    std::string id;
    std::vector<BoundPoint> points;
    double report_tolerance = 1e-9;
    double min_slack = 0.0;
    bool all_pass = false;

    void finish();
};

/// Pointwise modulus bound: |T(f;x) - f(x+t)| <= 2 w(f, sqrt(d)) with d the
/// direct second central moment. The target is f(x+t); the mean node sits at
/// t + mean_node_shift, not at 0 offset.
BoundReport verify_pointwise_bound(const StancuOperator& op, const RealFn& f,
                                   const GridSpec& x_grid, double report_tol = 1e-9);

/// Lipschitz-class bound: |T(f;x) - f(x+t)| <= m d^{alpha_exp/2}. Requires
/// lipschitz_check to pass on the evaluation range; throws PreconditionError
/// otherwise.
BoundReport verify_lipschitz_bound(const StancuOperator& op, const RealFn& f, double m,
                                   double alpha_exp, const GridSpec& x_grid,
                                   double report_tol = 1e-9);

using OperatorFactory = std::function<StancuOperator(long n, double t)>;

/// Uniform bound over (x,t) in [0,a]^2, one row per n. The rhs uses the
/// direct central moment maximized over the t grid; the closed-form variant
/// is carried along as a comparison column only.
struct UniformBoundRow {
    long n = 0;
    double q = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double delta_direct = 0.0;
    double delta_closed_form = 0.0;
};

struct UniformBoundReport {
    std::vector<UniformBoundRow> rows;
    double report_tolerance = 1e-9;
    double min_slack = 0.0;
    bool all_pass = false;
};

UniformBoundReport verify_uniform_bound(const std::vector<long>& n_list,
                                        const OperatorFactory& make, const RealFn& f, double a,
                                        double step, double report_tol = 1e-9);

/// Local second-modulus bound. Per n: residual = max_x |T(f;x) - f(x+t)|
/// minus the translation term w(f,|shift|); c_n = residual_+ / w2(f,sqrt(d)).
/// The report asserts only that the c_n stay bounded across the sweep (last
/// value at most twice the median), never a specific constant. A negative
/// shift argument is flagged and used through its absolute value.
struct SecondModulusRow {
    long n = 0;
    double q = 0.0;
    double shift = 0.0;
    double omega_shift = 0.0;
    double delta_direct = 0.0;
    double omega2_sqrt_delta = 0.0;
    double omega2_plain_delta = 0.0; // comparison column: w2 at delta, not sqrt(delta)
    double max_lhs = 0.0;
    double max_residual = 0.0;
    double c_n = 0.0;
    bool negative_shift = false;
};

struct SecondModulusReport {
    std::vector<SecondModulusRow> rows;
    double empirical_c = 0.0;
    bool bounded = false;
};

SecondModulusReport verify_second_modulus_bound(const std::vector<long>& n_list,
                                                const OperatorFactory& make, const RealFn& f,
                                                double t, const GridSpec& x_grid);

} // namespace qszasz

#endif
