#include "qszasz/grid_eval.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qszasz {

namespace {

int default_cap() {
    int hw = 1;
#ifdef _OPENMP
    hw = omp_get_max_threads();
#else
    hw = static_cast<int>(std::thread::hardware_concurrency());
#endif
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("QSZASZ_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v < 1024) hw = std::min<long>(hw, v);
    }
    return hw;
}

std::atomic<int> g_cap_override{0};

} // namespace

int thread_cap() {
    const int o = g_cap_override.load(std::memory_order_relaxed);
    if (o > 0) return o;
    static const int cap = default_cap();
    return cap;
}

void set_thread_cap(int cap) { g_cap_override.store(cap > 0 ? cap : 0, std::memory_order_relaxed); }

GridSpec::GridSpec(double lo_, double hi_, double step_) : lo(lo_), hi(hi_), step(step_) {
    if (!(lo < hi)) throw std::invalid_argument("GridSpec requires lo < hi");
    if (!(step > 0.0) || step > hi - lo)
        throw std::invalid_argument("GridSpec requires 0 < step <= hi - lo");
}

std::size_t GridSpec::points() const {
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

} // namespace qszasz
