#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace cb {

/// Worker count: min(hardware, CARTAN_BERNSTEIN_THREADS). The env var only
/// caps parallelism; results are independent of the worker count because
/// every parallel loop writes indexed slots and reduces sequentially.
inline unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    hw = std::min(hw, 16u);
    if (const char* env = std::getenv("CARTAN_BERNSTEIN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Runs fn(i) for i in [0, n) on up to thread_cap() threads, contiguous chunks.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned nt = std::min<std::size_t>(thread_cap(), n ? n : 1);
    if (nt <= 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cb
