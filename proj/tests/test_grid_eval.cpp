#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qszasz/grid_eval.hpp"

using namespace qszasz;

TEST_CASE("GridSpec") {
    const GridSpec g(0.0, 0.5, 0.05);
    CHECK(g.points() == 11);
    CHECK(g.at(0) == 0.0);
    CHECK(g.at(10) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(GridSpec(1.0, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(0.0, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(7), std::size_t(4096),
                          std::size_t(100001)}) {
        std::vector<double> values(n);
        for (auto& v : values) v = dist(rng);
        auto f = [&](std::size_t i) { return std::sin(values[i]) * values[i]; };

        const double serial = max_map_serial(n, f);
        CHECK(max_map_parallel(n, f) == serial);
        CHECK(max_map(n, f) == serial);

        std::vector<double> a(n), b(n);
        fill_serial(n, f, a.data());
        fill_parallel(n, f, b.data());
        CHECK(a == b);
    }
}

TEST_CASE("thread cap does not change results") {
    auto f = [](std::size_t i) {
        const double x = static_cast<double>(i) * 1e-4;
        return std::cos(x) / (1.0 + x);
    };
    set_thread_cap(1);
    const double one = max_map(50000, f);
    set_thread_cap(8);
    const double many = max_map(50000, f);
    set_thread_cap(0);
    CHECK(one == many);
    CHECK(thread_cap() >= 1);
}
