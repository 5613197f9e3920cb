// Serial reference vs OpenMP kernels on the hot grid scans. Run with
// --benchmark_min_time=0.1s for a quick look.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qszasz/grid_eval.hpp"
#include "qszasz/smoothness.hpp"
#include "qszasz/statconv.hpp"

using namespace qszasz;

namespace {

// the pair scan at the heart of the modulus estimate, at a fixed level
template <class MaxFn>
double modulus_scan(MaxFn&& max_fn, const std::vector<double>& v, std::size_t koff) {
    const std::size_t n = v.size();
    return max_fn((n - 1) * koff, [&](std::size_t m) {
        const std::size_t i = m / koff;
        const std::size_t j = i + m % koff + 1;
        return j < n ? std::abs(v[j] - v[i]) : 0.0;
    });
}

std::vector<double> sampled_sin(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::sin(3.0 * static_cast<double>(i) / n);
    return v;
}

void BM_modulus_scan_serial(benchmark::State& state) {
    const auto v = sampled_sin(static_cast<std::size_t>(state.range(0)));
    const std::size_t koff = v.size() / 64;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            modulus_scan([](std::size_t n, auto&& f) { return max_map_serial(n, f); }, v, koff));
    }
}

void BM_modulus_scan_parallel(benchmark::State& state) {
    const auto v = sampled_sin(static_cast<std::size_t>(state.range(0)));
    const std::size_t koff = v.size() / 64;
    for (auto _ : state) {
        benchmark::DoNotOptimize(modulus_scan(
            [](std::size_t n, auto&& f) { return max_map_parallel(n, f); }, v, koff));
    }
}

void BM_modulus_full_serial(benchmark::State& state) {
    const GridSpec dom(0.0, 2.0, 0.01);
    set_thread_cap(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            modulus_of_continuity([](double s) { return std::sin(3.0 * s); }, 0.2, dom));
    set_thread_cap(0);
}

void BM_modulus_full_parallel(benchmark::State& state) {
    const GridSpec dom(0.0, 2.0, 0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            modulus_of_continuity([](double s) { return std::sin(3.0 * s); }, 0.2, dom));
}

void BM_korovkin_row_serial(benchmark::State& state) {
    const QSequence qs = QSequence::make(QSequenceKind::ratio, 200);
    set_thread_cap(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(korovkin_experiment(qs, 0.5, 0.005, 1.0, 2.0,
                                                     PowerSeries({1.0, 1.0}), {80}, 1e-12, 1e-3));
    set_thread_cap(0);
}

void BM_korovkin_row_parallel(benchmark::State& state) {
    const QSequence qs = QSequence::make(QSequenceKind::ratio, 200);
    for (auto _ : state)
        benchmark::DoNotOptimize(korovkin_experiment(qs, 0.5, 0.005, 1.0, 2.0,
                                                     PowerSeries({1.0, 1.0}), {80}, 1e-12, 1e-3));
}

} // namespace

BENCHMARK(BM_modulus_scan_serial)->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(BM_modulus_scan_parallel)->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(BM_modulus_full_serial);
BENCHMARK(BM_modulus_full_parallel);
BENCHMARK(BM_korovkin_row_serial);
BENCHMARK(BM_korovkin_row_parallel);

BENCHMARK_MAIN();
