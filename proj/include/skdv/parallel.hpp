#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace skdv {

// Worker count: SKDV_THREADS caps the pool, default hardware concurrency.
inline int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("SKDV_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1)
            n = std::min(n, cap);
    }
    return n;
}

// Runs fn(i) for i in [0, n).  Results must be written into index-addressed
// slots by the callee; assembly stays deterministic regardless of scheduling.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            int i;
            while ((i = next.fetch_add(1)) < n)
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

} // namespace skdv
