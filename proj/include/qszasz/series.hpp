#ifndef QSZASZ_SERIES_HPP
#define QSZASZ_SERIES_HPP

#include <cstddef>
#include <vector>

#include "qszasz/qcore.hpp"

namespace qszasz {

/// Finite coefficient sequence a_0..a_K of the generating series A(u).
/// The public constructor rejects A(1) = 0; unchecked() exists for internal
/// results such as derivative series, which may legitimately sum to zero.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<double> coeffs);
    static PowerSeries unchecked(std::vector<double> coeffs);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

    /// Horner evaluation of sum a_k u^k.
    double eval(double u) const;

    /// A(1), cached at construction.
    double at_one() const { return at_one_; }

    /// True iff all a_k >= 0 and A(1) > 0; the condition under which the
    /// operator built on this kernel is positive.
    bool positive_kernel() const { return positive_; }

    /// Coefficient-shifted series with b_k = a_{k+1} [k+1]_q, so that the
    /// result evaluates D_q A. Iterate for higher q-derivatives.
    PowerSeries q_derivative(const QValue& q) const;

private:
    PowerSeries() = default;
    void finish();

    std::vector<double> coeffs_;
    double at_one_ = 0.0;
    bool positive_ = false;
};

/// P_k(q;y) = [k]_q! sum_{j<=min(k,K)} a_j y^{k-j}/[k-j]_q!.
/// Throws OverflowError when the unnormalized value leaves double range;
/// large-k work should go through appell_weights instead.
double appell_coefficient(const PowerSeries& a, const QValue& q, double y, long k);

/// Normalized operator weights w_k = E_q^{-y} P_k(q;y)/(A(1) [k]_q!),
/// truncated once the accumulated mass reaches 1 - tol.
struct AppellWeights {
    double y = 0.0;
    std::vector<double> weights;
    double tail_mass_bound = 0.0;
    std::size_t truncation_index = 0;
};

AppellWeights appell_weights(const PowerSeries& a, const QValue& q, double y, double tol);

/// Direct summation of sum_k (P_k(q;y)/[k]_q!) [k]_q^2 next to the closed
/// form it is claimed to equal. The direct sum is the trustworthy side; the
/// closed form is reported, not asserted, because its q-shift factors do not
/// survive an independent derivation.
struct SecondPowerSumComparison {
    double direct = 0.0;
    double closed_form = 0.0;
    double abs_diff = 0.0;
};

SecondPowerSumComparison compare_second_power_sum(const PowerSeries& a, const QValue& q,
                                                  double y, double tol = 1e-12);

} // namespace qszasz

#endif
