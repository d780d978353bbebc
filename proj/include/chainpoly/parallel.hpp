#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace chainpoly {

// Runs fn(i) for i in [0, count) across up to `workers` threads. fn must be
// safe to call concurrently for distinct i; results keyed by i stay
// deterministic no matter the worker count.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    workers = std::max(1, std::min(workers, count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        int lo = static_cast<int>(static_cast<long long>(count) * t / workers);
        int hi = static_cast<int>(static_cast<long long>(count) * (t + 1) / workers);
        pool.emplace_back([lo, hi, &fn]() {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace chainpoly
