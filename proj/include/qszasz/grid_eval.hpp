#ifndef QSZASZ_GRID_EVAL_HPP
#define QSZASZ_GRID_EVAL_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qszasz {

/// Parallelism cap: min(hardware threads, QSZASZ_THREADS). Always >= 1.
int thread_cap();

/// Override the cap (tests, benchmarks); 0 restores the default.
void set_thread_cap(int cap);

/// Closed uniform grid lo, lo+step, ..., hi.
struct GridSpec {
    double lo;
    double hi;
    double step;

    GridSpec(double lo_, double hi_, double step_);
    std::size_t points() const;
    double at(std::size_t i) const { return lo + static_cast<double>(i) * step; }
};

inline constexpr std::size_t kParallelGrain = 4096;

// Serial reference kernels. The OpenMP variants must match them bit for bit:
// max over doubles is an exact reduction in any order, and fills write
// disjoint slots, so neither thread count nor schedule can change a result.

template <class F>
double max_map_serial(std::size_t n, F&& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, f(i));
    return m;
}

template <class F>
void fill_serial(std::size_t n, F&& f, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
}

template <class F>
double max_map_parallel(std::size_t n, F&& f) {
#ifdef _OPENMP
    double m = -std::numeric_limits<double>::infinity();
    const int nt = thread_cap();
#pragma omp parallel for schedule(static) reduction(max : m) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        m = std::max(m, f(static_cast<std::size_t>(i)));
    return m;
#else
    return max_map_serial(n, std::forward<F>(f));
#endif
}

template <class F>
void fill_parallel(std::size_t n, F&& f, double* out) {
#ifdef _OPENMP
    const int nt = thread_cap();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        out[i] = f(static_cast<std::size_t>(i));
#else
    fill_serial(n, std::forward<F>(f), out);
#endif
}

template <class F>
double max_map(std::size_t n, F&& f) {
    if (n < kParallelGrain || thread_cap() == 1) return max_map_serial(n, std::forward<F>(f));
    return max_map_parallel(n, std::forward<F>(f));
}

template <class F>
void fill(std::size_t n, F&& f, double* out) {
    if (n < kParallelGrain || thread_cap() == 1)
        fill_serial(n, std::forward<F>(f), out);
    else
        fill_parallel(n, std::forward<F>(f), out);
}

} // namespace qszasz

#endif
