#ifndef QSZASZ_OPERATORS_HPP
#define QSZASZ_OPERATORS_HPP

#include <cstddef>
#include <vector>

#include "qszasz/qcore.hpp"
#include "qszasz/series.hpp"

namespace qszasz {

/// One operator instance: nodes x + ([k]_q + alpha)/([n]_q + beta) weighted
/// by the normalized Appell mass at y = [n]_q t.
struct OperatorParams {
    long n = 1;
    double t = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    QValue q;
    PowerSeries kernel;
    // The constraint 0 <= alpha <= beta keeps nodes in scale; set this to
    // work with unconstrained pairs.
    bool relax_stancu = false;
};

void validate(const OperatorParams& params); // throws on violation

/// Which closed-form expression of the second central moment to evaluate.
/// Both are reported for comparison against the direct sum; neither is
/// asserted, since they disagree with each other and with the direct value.
enum class ClosedFormVariant { pointwise, uniform };

struct MomentReport {
    int v = 0;
    double x = 0.0;
    double direct = 0.0;
    double closed_form = 0.0;
    double abs_diff = 0.0;
};

class StancuOperator {
public:
    explicit StancuOperator(OperatorParams params, double tol = 1e-12);

    /// sum_k w_k f(x + node_k); the truncated tail contributes no more than
    /// tol * sup|f| over the evaluation range.
    double apply(const RealFn& f, double x) const;

    /// Moments of (x+t)^v, v in {0,1,2}, by direct summation (ground truth).
    double moment(int v, double x) const;

    /// Literal closed-form moments; v=0 and v=1 match the direct sums, the
    /// v=2 formula is comparison-only.
    double moment_closed_form(int v, double x) const;

    MomentReport moment_report(int v, double x) const;

    /// R = e_q^{q y} E_q^{-y} / A(1) with y = [n]_q t.
    double r_factor() const { return r_; }

    /// sum_k w_k (node_k - t)^2 by direct summation; independent of x.
    double central_moment2() const;

    /// Closed-form second central moment candidates, for comparison.
    double central_moment2_closed_form(ClosedFormVariant variant) const;

    /// T(f;x) - f(x + ([n]_q t + alpha + D_qA(1) R)/([n]_q + beta)) + f(x+t);
    /// annihilates s - (x+t) by construction.
    double auxiliary_apply(const RealFn& f, double x) const;

    /// (alpha + D_qA(1) R - beta t)/([n]_q + beta): how far the mean node
    /// sits from t. Drives the translation term of the local bound.
    double mean_node_shift() const;

    /// Upper bound for every node offset: ([k]_q + alpha)/([n]_q + beta)
    /// with [k]_q < 1/(1-q).
    double node_sup() const;

    double q_int_n() const { return qn_; }
    double denom() const { return denom_; }
    double dq_a1() const { return dqa1_; }
    double dq2_a1() const { return dq2a1_; }
    const OperatorParams& params() const { return params_; }
    const AppellWeights& weights() const { return w_; }
    double node(std::size_t k) const { return nodes_[k]; }
    double tol() const { return tol_; }

private:
    OperatorParams params_;
    double tol_;
    double qn_;    // [n]_q
    double denom_; // [n]_q + beta
    AppellWeights w_;
    std::vector<double> nodes_;
    double dqa1_;  // D_q A(1)
    double dq2a1_; // D_q^2 A(1)
    double r_;
};

} // namespace qszasz

#endif
