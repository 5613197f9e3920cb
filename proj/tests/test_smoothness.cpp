#include <doctest.h>

#include <cmath>

#include "qszasz/errors.hpp"
#include "qszasz/smoothness.hpp"

using namespace qszasz;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

StancuOperator make(double qq, long n, double t, double alpha, double beta,
                    std::vector<double> coeffs) {
    OperatorParams p{n, t, alpha, beta, QValue(qq), PowerSeries(std::move(coeffs)), false};
    return StancuOperator(std::move(p), 1e-12);
}

} // namespace

TEST_CASE("modulus of continuity on reference functions") {
    const GridSpec unit(0.0, 1.0, 0.05);
    CHECK(near(modulus_of_continuity([](double s) { return s; }, 0.1, unit), 0.1, 1e-6));
    CHECK(modulus_of_continuity([](double) { return 3.0; }, 0.2, unit) == 0.0);
    // sup of (x+d)^2 - x^2 at x = 1 - d
    CHECK(near(modulus_of_continuity([](double s) { return s * s; }, 0.1, unit), 0.19, 1e-4));
    CHECK(modulus_of_continuity([](double s) { return s; }, 0.0, unit) == 0.0);
}

TEST_CASE("modulus is monotone in delta and bounded by oscillation") {
    const GridSpec dom(0.0, 3.0, 0.05);
    auto f = [](double s) { return std::sin(3.0 * s); };
    double prev = 0.0;
    for (double delta : {0.05, 0.1, 0.2, 0.4, 0.8}) {
        const double w = modulus_of_continuity(f, delta, dom);
        CHECK(w >= prev - 2e-6);
        CHECK(w <= 2.0 + 1e-9); // 2 sup|f|
        prev = w;
    }
}

TEST_CASE("pointwise bound from the modulus (overshoot form)") {
    const GridSpec dom(0.0, 1.0, 0.02);
    auto f = [](double s) { return std::sqrt(s) + 0.3 * std::sin(5.0 * s); };
    for (double delta : {0.07, 0.19}) {
        const double w = modulus_of_continuity(f, delta, dom) + 1e-6;
        for (double x : {0.0, 0.13, 0.52, 0.98}) {
            for (double y : {0.02, 0.33, 0.71, 1.0}) {
                const double lhs = std::abs(f(x) - f(y));
                CHECK(lhs <= w * (std::abs(x - y) / delta + 1.0) + 1e-12);
            }
        }
    }
}

TEST_CASE("second modulus on reference functions") {
    const GridSpec unit(0.0, 1.0, 0.05);
    CHECK(second_modulus([](double s) { return 2.0 * s + 1.0; }, 0.2, unit) <= 1e-10);
    CHECK(second_modulus([](double) { return 7.0; }, 0.2, unit) == 0.0);
    // second difference of s^2 is exactly 2h^2
    CHECK(near(second_modulus([](double s) { return s * s; }, 0.1, unit), 0.02, 1e-6));
    // bounded by 4 sup|f|
    const GridSpec dom(0.0, 3.0, 0.05);
    CHECK(second_modulus([](double s) { return std::sin(4.0 * s); }, 1.0, dom) <= 4.0 + 1e-9);
}

TEST_CASE("lipschitz_check") {
    const GridSpec unit(0.0, 1.0, 0.01);
    CHECK(lipschitz_check([](double s) { return std::abs(s - 0.5); }, 1.0, 1.0, unit));
    CHECK_FALSE(lipschitz_check([](double s) { return s * s; }, 1.0, 1.0, unit));
    CHECK(lipschitz_check([](double s) { return std::sqrt(s); }, 1.0, 0.5, unit));
    CHECK_THROWS_AS(lipschitz_check([](double s) { return s; }, -1.0, 1.0, unit),
                    PreconditionError);
    // modulus of a 1-Lipschitz function sits below M delta
    for (double delta : {0.1, 0.3}) {
        const double w =
            modulus_of_continuity([](double s) { return std::abs(s - 0.5); }, delta, unit);
        CHECK(w <= delta + 1e-9);
    }
}

TEST_CASE("pointwise bound report") {
    const GridSpec xg(0.0, 0.5, 0.05);
    // constant functions make the left side vanish
    {
        const auto op = make(0.9, 10, 0.3, 1.0, 2.0, {1.0, 1.0});
        const BoundReport rep = verify_pointwise_bound(op, [](double) { return 2.0; }, xg);
        CHECK(rep.all_pass);
        for (const auto& p : rep.points) CHECK(near(p.lhs, 0.0, 1e-10));
    }
    {
        const auto op = make(0.9, 10, 0.3, 1.0, 2.0, {1.0, 1.0});
        const BoundReport rep =
            verify_pointwise_bound(op, [](double s) { return std::sin(s); }, xg);
        CHECK(rep.all_pass);
        CHECK(rep.min_slack >= -1e-9);
        CHECK(rep.id == "pointwise");
    }
    // the guarantee persists as the central moment shrinks along n; both
    // sides of the inequality tighten towards zero together
    for (long n : {5L, 10L, 20L, 40L}) {
        const auto op = make(0.9, n, 0.3, 1.0, 2.0, {1.0, 1.0});
        const BoundReport rep =
            verify_pointwise_bound(op, [](double s) { return std::sin(s); }, xg);
        CHECK(rep.all_pass);
        CHECK(rep.min_slack >= 0.0);
    }
}

TEST_CASE("lipschitz bound report") {
    const GridSpec xg(0.0, 0.5, 0.05);
    const auto op = make(0.9, 10, 0.3, 1.0, 2.0, {1.0, 1.0});
    const BoundReport dev =
        verify_lipschitz_bound(op, [](double s) { return std::abs(s - 0.5); }, 1.0, 1.0, xg);
    CHECK(dev.all_pass);
    const BoundReport root =
        verify_lipschitz_bound(op, [](double s) { return std::sqrt(s); }, 1.0, 0.5, xg);
    CHECK(root.all_pass);
    CHECK(root.min_slack > 0.0);
    CHECK_THROWS_AS(
        verify_lipschitz_bound(op, [](double s) { return s * s; }, 1.0, 1.0, xg),
        PreconditionError);
}

TEST_CASE("uniform bound report") {
    const OperatorFactory factory = [](long n, double t) {
        const double qq = static_cast<double>(n) / static_cast<double>(n + 1);
        OperatorParams p{n, t, 1.0, 2.0, QValue(qq), PowerSeries({1.0, 1.0}), false};
        return StancuOperator(std::move(p), 1e-12);
    };
    const std::vector<long> ns{5, 10, 20, 40};
    {
        const auto rep =
            verify_uniform_bound(ns, factory, [](double) { return 1.5; }, 0.5, 0.05);
        CHECK(rep.all_pass);
        for (const auto& r : rep.rows) CHECK(near(r.lhs, 0.0, 1e-10));
    }
    const auto rep =
        verify_uniform_bound(ns, factory, [](double s) { return s * s; }, 0.5, 0.05);
    CHECK(rep.rows.size() == ns.size());
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        CHECK(rep.rows[i].lhs < rep.rows[i - 1].lhs);
    for (const auto& r : rep.rows) {
        CHECK(r.delta_direct > 0.0);
        CHECK(r.delta_closed_form > 0.0); // comparison column present
    }
}

TEST_CASE("second modulus bound report") {
    const GridSpec xg(0.0, 0.5, 0.05);
    const OperatorFactory factory = [](long n, double t) {
        const double qq = static_cast<double>(n) / static_cast<double>(n + 1);
        OperatorParams p{n, t, 1.0, 2.0, QValue(qq), PowerSeries({1.0, 1.0}), false};
        return StancuOperator(std::move(p), 1e-12);
    };
    const std::vector<long> ns{5, 10, 20, 40};
    {
        // affine functions: the translation term absorbs everything
        const auto rep = verify_second_modulus_bound(
            ns, factory, [](double s) { return 2.0 * s + 0.3; }, 0.25, xg);
        for (const auto& r : rep.rows) CHECK(r.max_residual <= 1e-5);
        CHECK(rep.bounded);
    }
    {
        const auto rep = verify_second_modulus_bound(
            ns, factory, [](double) { return 0.7; }, 0.25, xg);
        for (const auto& r : rep.rows) CHECK(near(r.max_residual, 0.0, 1e-10));
    }
    const auto rep = verify_second_modulus_bound(
        ns, factory, [](double s) { return s * s; }, 0.25, xg);
    CHECK(std::isfinite(rep.empirical_c));
    CHECK(rep.bounded);
    for (const auto& r : rep.rows) {
        CHECK(r.omega2_sqrt_delta >= 0.0);
        CHECK(r.omega2_plain_delta >= 0.0);
    }
}
