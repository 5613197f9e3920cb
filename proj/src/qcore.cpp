#include "qszasz/qcore.hpp"

#include <cmath>
#include <string>

#include "qszasz/errors.hpp"

namespace qszasz {

namespace {
constexpr std::size_t kMaxSeriesTerms = 1u << 20;
constexpr std::size_t kMaxProductFactors = 1u << 22;
} // namespace

QValue::QValue(double q) : q_(q) {
    if (!(q > 0.0) || !(q < 1.0))
        throw DomainError("q must satisfy 0 < q < 1, got " + std::to_string(q));
}

double q_integer(long n, const QValue& q) {
    if (n < 0) throw PreconditionError("q_integer: n must be nonnegative");
    const double qq = q.value();
    if (1.0 - qq < 1e-8) {
        // closed form cancels near q = 1
        double sum = 0.0, p = 1.0;
        for (long j = 0; j < n; ++j) {
            sum += p;
            p *= qq;
        }
        return sum;
    }
    return (1.0 - std::pow(qq, static_cast<double>(n))) / (1.0 - qq);
}

double q_factorial(long n, const QValue& q) {
    if (n < 0) throw PreconditionError("q_factorial: n must be nonnegative");
    double prod = 1.0;
    for (long j = 2; j <= n; ++j) prod *= q_integer(j, q);
    if (!std::isfinite(prod))
        throw OverflowError("q_factorial overflow at n = " + std::to_string(n));
    return prod;
}

double q_binomial(long n, long k, const QValue& q) {
    if (k < 0 || n < 0 || k > n)
        throw PreconditionError("q_binomial requires 0 <= k <= n");
    // multiplicative form avoids forming the large factorials
    double r = 1.0;
    for (long j = 1; j <= k; ++j) r *= q_integer(n - k + j, q) / q_integer(j, q);
    if (!std::isfinite(r)) throw OverflowError("q_binomial overflow");
    return r;
}

double q_exp_small(double x, const QValue& q, double tol, std::size_t* terms) {
    const double qq = q.value();
    if (std::abs(x) * (1.0 - qq) >= 1.0)
        throw DomainError("e_q series diverges: |x|(1-q) = " +
                          std::to_string(std::abs(x) * (1.0 - qq)) + " >= 1");
    double sum = 1.0;
    double term = 1.0;
    double qint = 0.0; // [k]_q
    std::size_t k = 0;
    for (;;) {
        qint = 1.0 + qq * qint; // now [k+1]_q
        term *= x / qint;
        sum += term;
        ++k;
        // ratios |t_{j+1}/t_j| = |x|/[j+1]_q decrease in j, so the first one
        // bounds the whole tail geometrically
        const double r = std::abs(x) / (1.0 + qq * qint);
        if (r < 1.0 && std::abs(term) / (1.0 - r) < tol) break;
        if (k > kMaxSeriesTerms)
            throw OverflowError("e_q series did not settle within the term budget");
    }
    if (terms) *terms = k;
    return sum;
}

double q_exp_big(double x, const QValue& q, double tol, std::size_t* terms) {
    const double qq = q.value();
    if (x >= 0.0) {
        double sum = 1.0;
        double term = 1.0;
        double qint = 0.0; // [k]_q
        double qpow = 1.0; // q^k
        std::size_t k = 0;
        for (;;) {
            qint = 1.0 + qq * qint;
            term *= qpow * x / qint;
            qpow *= qq;
            sum += term;
            ++k;
            const double r = qpow * x / (1.0 + qq * qint);
            if (r < 1.0 && term / (1.0 - r) < tol) break;
            if (k > kMaxSeriesTerms)
                throw OverflowError("E_q series did not settle within the term budget");
        }
        if (terms) *terms = k;
        return sum;
    }
    // Euler product E_q^x = prod_k (1 + (1-q) q^k x); every partial factor is
    // exact to rounding, so there is no cancellation for x < 0. Remaining
    // factors k >= m contribute |log| <= q^m |x| / (1 - |c_m|).
    double prod = 1.0;
    double c = (1.0 - qq) * x;
    std::size_t k = 0;
    for (;;) {
        prod *= 1.0 + c;
        c *= qq;
        ++k;
        const double ac = std::abs(c);
        if (ac < 1.0 && (ac / (1.0 - qq)) / (1.0 - ac) < tol) break;
        if (k > kMaxProductFactors)
            throw OverflowError("E_q product did not settle within the factor budget");
    }
    if (terms) *terms = k;
    return prod;
}

double q_derivative(const RealFn& f, double x, const QValue& q) {
    if (x != 0.0) {
        const double qq = q.value();
        return (f(x) - f(qq * x)) / ((1.0 - qq) * x);
    }
    const double h = 1e-6;
    return (f(h) - f(-h)) / (2.0 * h);
}

} // namespace qszasz
