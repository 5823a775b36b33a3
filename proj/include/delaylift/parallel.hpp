#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace delaylift {

/// Worker count: DELAYLIFT_THREADS if set, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("DELAYLIFT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Runs fn(i) for i in [0, n). Each index writes only its own output slot, so
/// results are identical for any worker count.
inline void parallel_for_indices(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace delaylift
