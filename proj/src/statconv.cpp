#include "qszasz/statconv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qszasz/errors.hpp"
#include "qszasz/grid_eval.hpp"

namespace qszasz {

bool DensityProfile::trending_to_zero(double cutoff) const {
    if (prefix.size() < 8) return false;
    const std::size_t quarter = prefix.size() / 4;
    double first = 0.0, last = 0.0;
    for (std::size_t i = 0; i < quarter; ++i) first += prefix[i];
    for (std::size_t i = prefix.size() - quarter; i < prefix.size(); ++i) last += prefix[i];
    first /= static_cast<double>(quarter);
    last /= static_cast<double>(quarter);
    return last < first && last < cutoff;
}

DensityProfile prefix_density(const std::function<bool(long)>& indicator, long horizon) {
    if (horizon < 1) throw PreconditionError("prefix_density requires horizon >= 1");
    DensityProfile p;
    p.horizon = horizon;
    p.prefix.resize(static_cast<std::size_t>(horizon));
    long count = 0;
    for (long n = 1; n <= horizon; ++n) {
        if (indicator(n)) ++count;
        p.prefix[static_cast<std::size_t>(n - 1)] =
            static_cast<double>(count) / static_cast<double>(n);
    }
    return p;
}

DensityProfile st_limit_profile(const std::vector<double>& seq, double ell, double eps) {
    return prefix_density(
        [&](long k) { return std::abs(seq[static_cast<std::size_t>(k - 1)] - ell) >= eps; },
        static_cast<long>(seq.size()));
}

double q_sequence_value(QSequenceKind kind, long n) {
    if (n < 1) throw PreconditionError("q_sequence_value requires n >= 1");
    const double nd = static_cast<double>(n);
    switch (kind) {
        case QSequenceKind::ratio:
            return nd / (nd + 1.0);
        case QSequenceKind::one_minus_inv:
            return 1.0 - 1.0 / (nd + 1.0);
        case QSequenceKind::custom:
            break;
    }
    throw PreconditionError("q_sequence_value: custom sequences carry explicit values");
}

QSequence QSequence::make(QSequenceKind kind, long horizon) {
    if (kind == QSequenceKind::custom)
        throw PreconditionError("QSequence::make: use custom() for explicit values");
    QSequence s;
    s.kind_ = kind;
    s.values_.resize(static_cast<std::size_t>(horizon));
    for (long n = 1; n <= horizon; ++n)
        s.values_[static_cast<std::size_t>(n - 1)] = q_sequence_value(kind, n);
    return s;
}

QSequence QSequence::custom(std::vector<double> values) {
    for (double v : values)
        if (!(v > 0.0) || !(v < 1.0))
            throw DomainError("QSequence: every value must lie in (0,1)");
    QSequence s;
    s.kind_ = QSequenceKind::custom;
    s.values_ = std::move(values);
    return s;
}

double QSequence::at(long n) const {
    if (n < 1 || n > horizon())
        throw PreconditionError("QSequence index " + std::to_string(n) + " outside horizon");
    return values_[static_cast<std::size_t>(n - 1)];
}

QSequence::Admissibility QSequence::check(double eps) const {
    Admissibility adm;
    adm.q_exceedance = st_limit_profile(values_, 1.0, eps);
    std::vector<double> powers(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        powers[i] = std::pow(values_[i], static_cast<double>(i + 1));
    // empirical b: median of the last quartile of q_n^n
    std::vector<double> tail(powers.end() - static_cast<long>(powers.size() / 4 + 1), powers.end());
    std::sort(tail.begin(), tail.end());
    adm.b = tail[tail.size() / 2];
    adm.qn_exceedance = st_limit_profile(powers, adm.b, eps);
    adm.admissible = adm.b < 1.0 - 1e-3 && adm.q_exceedance.trending_to_zero() &&
                     adm.qn_exceedance.trending_to_zero();
    return adm;
}

KorovkinTable korovkin_experiment(const QSequence& qs, double a, double step, double alpha,
                                  double beta, const PowerSeries& kernel,
                                  const std::vector<long>& n_list, double tol, double eps) {
    KorovkinTable table;
    const GridSpec tx(0.0, a, step);
    const std::size_t np = tx.points();
    for (long n : n_list) {
        const QValue q(qs.at(n));
        std::vector<StancuOperator> ops;
        ops.reserve(np);
        for (std::size_t it = 0; it < np; ++it)
            ops.push_back(StancuOperator({n, tx.at(it), alpha, beta, q, kernel}, tol));

        KorovkinRow row;
        row.n = n;
        row.q_n = q.value();
        row.q_int = ops.front().q_int_n();
        double evs[3] = {0.0, 0.0, 0.0};
        for (int v = 0; v <= 2; ++v) {
            evs[v] = max_map(np * np, [&](std::size_t m) {
                const auto& op = ops[m / np];
                const double x = tx.at(m % np);
                const double target = std::pow(x + op.params().t, v);
                return std::abs(op.moment(v, x) - target);
            });
        }
        row.e0 = evs[0];
        row.e1 = evs[1];
        row.e2 = evs[2];

        const double d = row.q_int + beta;
        const double d2 = d * d;
        const double dqa1 = ops.front().dq_a1();
        const double dq2a1 = ops.front().dq2_a1();
        const double r0 = 1.0 / kernel.at_one(); // sup over t of the R factor
        row.bound1 = (alpha + r0 * dqa1) / d + beta * a / d;
        row.bound2_parts[0] = 2.0 * a * (alpha + r0 * dqa1) / d;
        row.bound2_parts[1] =
            (alpha * alpha + 2.0 * r0 * alpha * dqa1 + dq2a1 + beta * beta * a * a) / d2;
        row.bound2_parts[2] = a * row.q_int * (2.0 * alpha + dqa1) / d2;
        row.bound2_parts[3] = a * q.value() * row.q_int / d2;
        row.bound2 = row.bound2_parts[0] + row.bound2_parts[1] + row.bound2_parts[2] +
                     row.bound2_parts[3];
        row.inv_denom = 1.0 / d;
        row.ratio1 = row.q_int / d2;
        row.ratio2 = q.value() * row.q_int / d2;
        table.rows.push_back(row);
    }

    for (int v = 0; v <= 2; ++v) {
        std::vector<double> seq;
        seq.reserve(table.rows.size());
        for (const auto& r : table.rows) seq.push_back(v == 0 ? r.e0 : v == 1 ? r.e1 : r.e2);
        if (seq.size() >= 1)
            table.e_exceedance.push_back(st_limit_profile(seq, 0.0, eps));
    }
    return table;
}

} // namespace qszasz
