#ifndef QSZASZ_STATCONV_HPP
#define QSZASZ_STATCONV_HPP

#include <functional>
#include <vector>

#include "qszasz/operators.hpp"

namespace qszasz {

/// Prefix natural densities d_n = |{k <= n : k in K}| / n for n = 1..horizon.
struct DensityProfile {
    long horizon = 0;
    std::vector<double> prefix; // prefix[n-1] = d_n

    /// Finite-horizon stand-in for "density zero": the last-quartile mean is
    /// below the first-quartile mean and below the cutoff.
    bool trending_to_zero(double cutoff = 0.05) const;
};

DensityProfile prefix_density(const std::function<bool(long)>& indicator, long horizon);

/// Densities of the exceedance set {k : |x_k - ell| >= eps}; seq[k-1] = x_k.
DensityProfile st_limit_profile(const std::vector<double>& seq, double ell, double eps);

enum class QSequenceKind { ratio, one_minus_inv, custom };

/// ratio: n/(n+1); one_minus_inv: 1 - 1/(n+1). Both stay in (0,1) and have
/// q_n^n converging to 1/e.
double q_sequence_value(QSequenceKind kind, long n);

class QSequence {
public:
    static QSequence make(QSequenceKind kind, long horizon);
    static QSequence custom(std::vector<double> values);

    QSequenceKind kind() const { return kind_; }
    long horizon() const { return static_cast<long>(values_.size()); }
    double at(long n) const; // 1-based
    const std::vector<double>& values() const { return values_; }

    struct Admissibility {
        bool admissible = false;
        double b = 0.0; // empirical limit of q_n^n
        DensityProfile q_exceedance;
        DensityProfile qn_exceedance;
    };

    /// Empirical check of the two required limits: q_n -> 1 and q_n^n -> b
    /// with b < 1, both in the exceedance-density sense.
    Admissibility check(double eps = 1e-2) const;

private:
    QSequenceKind kind_ = QSequenceKind::custom;
    std::vector<double> values_;
};

struct KorovkinRow {
    long n = 0;
    double q_n = 0.0;
    double q_int = 0.0; // [n]_{q_n}
    double e0 = 0.0;    // sup over (x,t) in [0,a]^2 of |T(e_v) - e_v|
    double e1 = 0.0;
    double e2 = 0.0;
    double bound1 = 0.0;   // threshold expression controlling e1
    double bound2 = 0.0;   // sum of the four parts below, controls e2
    double bound2_parts[4] = {0.0, 0.0, 0.0, 0.0};
    double inv_denom = 0.0;
    double ratio1 = 0.0; // [n]_q / ([n]_q + beta)^2
    double ratio2 = 0.0; // q [n]_q / ([n]_q + beta)^2
};

struct KorovkinTable {
    std::vector<KorovkinRow> rows;
    std::vector<DensityProfile> e_exceedance; // one profile per v = 0,1,2
};

/// Sup-norm test-function errors over [0,a]^2 for each n, next to the
/// threshold expressions that control them. The thresholds are evaluated at
/// the t-sup of R, which is 1/A(1).
KorovkinTable korovkin_experiment(const QSequence& qs, double a, double step, double alpha,
                                  double beta, const PowerSeries& kernel,
                                  const std::vector<long>& n_list, double tol, double eps);

} // namespace qszasz

#endif
