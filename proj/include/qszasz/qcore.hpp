#ifndef QSZASZ_QCORE_HPP
#define QSZASZ_QCORE_HPP

#include <cstddef>
#include <functional>

namespace qszasz {

using RealFn = std::function<double(double)>;

/// Deformation parameter, strictly inside (0,1).
class QValue {
public:
    explicit QValue(double q);
    double value() const { return q_; }

private:
    double q_;
};

/// [n]_q = (1 - q^n)/(1 - q); evaluated as the explicit geometric sum when
/// q is close enough to 1 that the closed form cancels.
double q_integer(long n, const QValue& q);

/// [n]_q! with [0]_q! = 1.
double q_factorial(long n, const QValue& q);

/// [n]_q! / ([k]_q! [n-k]_q!), 0 <= k <= n.
double q_binomial(long n, long k, const QValue& q);

/// e_q^x = sum x^n/[n]_q!. Radius of convergence 1/(1-q); throws DomainError
/// when |x|(1-q) >= 1. Truncation is certified: the loop stops once the
/// geometric tail bound of the remaining terms drops below tol. The index of
/// the last included term is written to *terms when given.
double q_exp_small(double x, const QValue& q, double tol = 1e-15,
                   std::size_t* terms = nullptr);

/// E_q^x = sum q^{n(n-1)/2} x^n/[n]_q!, entire in x. Summed termwise for
/// x >= 0; for x < 0 the alternating series cancels catastrophically once
/// |x| is large, so the equivalent Euler product over (1 + (1-q)q^k x) is
/// used instead, with the same certified-tail stopping contract.
double q_exp_big(double x, const QValue& q, double tol = 1e-15,
                 std::size_t* terms = nullptr);

/// (D_q f)(x) = (f(x) - f(qx)) / ((1-q)x) for x != 0; at x = 0 a symmetric
/// difference with step 1e-6 estimates the classical derivative.
double q_derivative(const RealFn& f, double x, const QValue& q);

} // namespace qszasz

#endif
