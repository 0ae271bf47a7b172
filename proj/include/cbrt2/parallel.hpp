#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace cbrt2 {

/// Run f(i) for i in [0, n) on up to hardware_concurrency() threads, block
/// partitioned. Each index is processed by exactly one thread, so writes to
/// per-index slots need no synchronization; callers combine results in index
/// order afterwards, which keeps every reduction bit-deterministic regardless
/// of thread count.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = hw == 0 ? 1 : hw;
    if (nthreads > n)
        nthreads = n == 0 ? 1 : n;
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::thread> ts;
    ts.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t lo = n * t / nthreads;
        std::size_t hi = n * (t + 1) / nthreads;
        ts.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i)
                f(i);
        });
    }
    for (auto& t : ts)
        t.join();
}

}  // namespace cbrt2
