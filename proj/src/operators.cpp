#include "qszasz/operators.hpp"

#include <cmath>
#include <string>

#include "qszasz/errors.hpp"

namespace qszasz {

void validate(const OperatorParams& params) {
    if (params.n < 1) throw PreconditionError("operator requires n >= 1");
    if (params.t < 0.0) throw PreconditionError("operator requires t >= 0");
    if (params.alpha < 0.0 || params.beta < 0.0)
        throw PreconditionError("operator requires alpha, beta >= 0");
    if (!params.relax_stancu && params.alpha > params.beta)
        throw PreconditionError("operator requires alpha <= beta (set relax_stancu to override)");
    const double qq = params.q.value();
    // t(1-q^n) = y(1-q) with y = [n]_q t
    if (params.t * (1.0 - std::pow(qq, static_cast<double>(params.n))) >= 1.0)
        throw DomainError("operator requires t(1-q^n) < 1");
}

StancuOperator::StancuOperator(OperatorParams params, double tol)
    : params_(std::move(params)),
      tol_(tol),
      qn_(0.0),
      denom_(0.0),
      dqa1_(0.0),
      dq2a1_(0.0),
      r_(0.0) {
    validate(params_);
    qn_ = q_integer(params_.n, params_.q);
    denom_ = qn_ + params_.beta;
    const double y = qn_ * params_.t;
    w_ = appell_weights(params_.kernel, params_.q, y, tol_);

    nodes_.resize(w_.weights.size());
    double qint = 0.0; // [k]_q
    const double qq = params_.q.value();
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        nodes_[k] = (qint + params_.alpha) / denom_;
        qint = 1.0 + qq * qint;
    }

    const PowerSeries da = params_.kernel.q_derivative(params_.q);
    dqa1_ = da.eval(1.0);
    dq2a1_ = da.q_derivative(params_.q).eval(1.0);
    r_ = q_exp_small(qq * y, params_.q, 1e-15) * q_exp_big(-y, params_.q, 1e-15) /
         params_.kernel.at_one();
}

double StancuOperator::apply(const RealFn& f, double x) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) sum += w_.weights[k] * f(x + nodes_[k]);
    return sum;
}

double StancuOperator::moment(int v, double x) const {
    if (v < 0 || v > 2) throw PreconditionError("moment order must be 0, 1 or 2");
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const double s = x + nodes_[k];
        double p = 1.0;
        for (int i = 0; i < v; ++i) p *= s;
        sum += w_.weights[k] * p;
    }
    return sum;
}

double StancuOperator::moment_closed_form(int v, double x) const {
    const double y = qn_ * params_.t;
    const double alpha = params_.alpha;
    switch (v) {
        case 0:
            return 1.0;
        case 1:
            return x + y / denom_ + alpha / denom_ + r_ * dqa1_ / denom_;
        case 2: {
            const double lead = x + y / denom_;
            const double d2 = denom_ * denom_;
            return lead * lead + 2.0 * x * (alpha + r_ * dqa1_) / denom_ +
                   (alpha * alpha + 2.0 * r_ * alpha * dqa1_ + dq2a1_) / d2 +
                   y * (2.0 * alpha + dqa1_) / d2 + params_.q.value() * y / d2;
        }
        default:
            throw PreconditionError("moment order must be 0, 1 or 2");
    }
}

MomentReport StancuOperator::moment_report(int v, double x) const {
    MomentReport rep;
    rep.v = v;
    rep.x = x;
    rep.direct = moment(v, x);
    rep.closed_form = moment_closed_form(v, x);
    rep.abs_diff = std::abs(rep.direct - rep.closed_form);
    return rep;
}

double StancuOperator::central_moment2() const {
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const double d = nodes_[k] - params_.t;
        sum += w_.weights[k] * d * d;
    }
    return sum;
}

double StancuOperator::central_moment2_closed_form(ClosedFormVariant variant) const {
    const double y = qn_ * params_.t;
    const double alpha = params_.alpha;
    const double d2 = denom_ * denom_;
    const double common = (alpha * alpha + 2.0 * r_ * alpha * dqa1_ + dq2a1_) / d2 +
                          y * (2.0 * alpha + dqa1_) / d2 + params_.q.value() * y / d2;
    const double t = params_.t;
    switch (variant) {
        case ClosedFormVariant::pointwise:
            return t * t * qn_ * qn_ / d2 + common;
        case ClosedFormVariant::uniform:
            return params_.beta * params_.beta * t * t * qn_ / d2 + common;
    }
    throw PreconditionError("unknown closed-form variant");
}

double StancuOperator::auxiliary_apply(const RealFn& f, double x) const {
    const double y = qn_ * params_.t;
    const double anchor = (y + params_.alpha + dqa1_ * r_) / denom_;
    return apply(f, x) - f(x + anchor) + f(x + params_.t);
}

double StancuOperator::mean_node_shift() const {
    return (params_.alpha + dqa1_ * r_ - params_.beta * params_.t) / denom_;
}

double StancuOperator::node_sup() const {
    return (1.0 / (1.0 - params_.q.value()) + params_.alpha) / denom_;
}

} // namespace qszasz
