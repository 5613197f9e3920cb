#include "qszasz/series.hpp"

#include <cmath>
#include <string>

#include "qszasz/errors.hpp"

namespace qszasz {

namespace {
constexpr std::size_t kMaxWeightTerms = 1u << 18;
} // namespace

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries needs at least one coefficient");
    finish();
    if (at_one_ == 0.0)
        throw std::invalid_argument("PowerSeries requires A(1) != 0");
}

PowerSeries PowerSeries::unchecked(std::vector<double> coeffs) {
    PowerSeries s;
    s.coeffs_ = std::move(coeffs);
    if (s.coeffs_.empty()) s.coeffs_.push_back(0.0);
    s.finish();
    return s;
}

void PowerSeries::finish() {
    at_one_ = 0.0;
    bool nonneg = true;
    for (double c : coeffs_) {
        at_one_ += c;
        if (c < 0.0) nonneg = false;
    }
    positive_ = nonneg && at_one_ > 0.0;
}

double PowerSeries::eval(double u) const {
    double r = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * u + coeffs_[i];
    return r;
}

PowerSeries PowerSeries::q_derivative(const QValue& q) const {
    std::vector<double> b;
    if (coeffs_.size() > 1) {
        b.resize(coeffs_.size() - 1);
        for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
            b[k] = coeffs_[k + 1] * q_integer(static_cast<long>(k) + 1, q);
    } else {
        b.push_back(0.0);
    }
    return unchecked(std::move(b));
}

double appell_coefficient(const PowerSeries& a, const QValue& q, double y, long k) {
    if (k < 0) throw PreconditionError("appell_coefficient: k must be nonnegative");
    const auto kk = static_cast<std::size_t>(k);
    if (y == 0.0) {
        // only j = k survives
        return kk <= a.degree() ? a.coeff(kk) * q_factorial(k, q) : 0.0;
    }
    // term_j = a_j y^{k-j} [k]_q!/[k-j]_q!; the q-factorial ratio is the
    // descending product [k]_q [k-1]_q ... [k-j+1]_q
    double sum = 0.0;
    double ratio = 1.0;
    const std::size_t jmax = std::min(kk, a.degree());
    for (std::size_t j = 0; j <= jmax; ++j) {
        if (j > 0) ratio *= q_integer(k - static_cast<long>(j) + 1, q);
        sum += a.coeff(j) * std::pow(y, static_cast<double>(kk - j)) * ratio;
    }
    if (!std::isfinite(sum))
        throw OverflowError("appell_coefficient overflow at k = " + std::to_string(k) +
                            "; use the normalized weight form");
    return sum;
}

AppellWeights appell_weights(const PowerSeries& a, const QValue& q, double y, double tol) {
    if (!a.positive_kernel())
        throw PositivityError("appell_weights requires a_k >= 0 and A(1) > 0");
    const double qq = q.value();
    if (y < 0.0) throw DomainError("appell_weights: y must be nonnegative");
    if (y * (1.0 - qq) >= 1.0)
        throw DomainError("appell_weights: y(1-q) = " + std::to_string(y * (1.0 - qq)) +
                          " >= 1, outside the e_q convergence region");

    const double inv_a1 = 1.0 / a.at_one();
    const double e_big = q_exp_big(-y, q, 1e-15);

    // w_k = E_q^{-y}/A(1) * sum_j a_j g_{k-j} with g_m = y^m/[m]_q!. The g_m
    // are built by the one-step recurrence g_m = g_{m-1} y/[m]_q, so no raw
    // factorial or power ever materializes.
    std::vector<double> g{1.0};
    g.reserve(256);

    AppellWeights out;
    out.y = y;
    double mass = 0.0;
    double qint = 0.0; // [k]_q
    const double target = 1.0 - tol;
    int stagnant = 0;
    for (std::size_t k = 0;; ++k) {
        if (k > 0) {
            qint = 1.0 + qq * qint;
            g.push_back(g[k - 1] * y / qint);
        }
        double s = 0.0;
        const std::size_t jmax = std::min(k, a.degree());
        for (std::size_t j = 0; j <= jmax; ++j) s += a.coeff(j) * g[k - j];
        const double w = e_big * inv_a1 * s;
        out.weights.push_back(w);
        mass += w;
        if (mass >= target) break;
        // once increments sit far below one ulp of the mass the target is out
        // of reach in double precision; stop with the achieved tail bound
        if (w <= mass * 1e-18) {
            if (++stagnant >= 3) break;
        } else {
            stagnant = 0;
        }
        if (k > kMaxWeightTerms)
            throw OverflowError("appell_weights: mass did not reach 1 - tol within the term budget");
    }
    out.truncation_index = out.weights.size();
    out.tail_mass_bound = std::max(0.0, 1.0 - mass);
    return out;
}

SecondPowerSumComparison compare_second_power_sum(const PowerSeries& a, const QValue& q,
                                                  double y, double tol) {
    const double qq = q.value();
    if (y < 0.0 || y * (1.0 - qq) >= 1.0)
        throw DomainError("compare_second_power_sum: y(1-q) must lie in [0,1)");

    // direct side: sum_k s_k [k]_q^2 with s_k = P_k/[k]_q! = sum_j a_j g_{k-j}
    std::vector<double> g{1.0};
    double direct = 0.0;
    double qint = 0.0;
    const double qsup = 1.0 / (1.0 - qq); // [k]_q < qsup for all k
    for (std::size_t k = 0;; ++k) {
        if (k > 0) {
            qint = 1.0 + qq * qint;
            g.push_back(g[k - 1] * y / qint);
        }
        double s = 0.0;
        const std::size_t jmax = std::min(k, a.degree());
        for (std::size_t j = 0; j <= jmax; ++j) s += a.coeff(j) * g[k - j];
        direct += s * qint * qint;
        if (k > a.degree()) {
            const double r = y / (1.0 + qq * qint); // bounds s_{k+1}/s_k from above
            if (r < 1.0 && std::abs(s) * qsup * qsup * r / (1.0 - r) < tol * (std::abs(direct) + 1.0))
                break;
        }
        if (k > kMaxWeightTerms)
            throw OverflowError("compare_second_power_sum: series did not settle");
    }

    const PowerSeries da = a.q_derivative(q);
    const PowerSeries d2a = da.q_derivative(q);
    const double e_y = q_exp_small(y, q, 1e-15);
    const double e_qy = q_exp_small(qq * y, q, 1e-15);
    const double closed = d2a.eval(1.0) * e_y + da.eval(1.0) * y * e_y +
                          y * da.eval(qq) * e_qy + a.at_one() * y * y * e_y;

    SecondPowerSumComparison cmp;
    cmp.direct = direct;
    cmp.closed_form = closed;
    cmp.abs_diff = std::abs(direct - closed);
    return cmp;
}

} // namespace qszasz
