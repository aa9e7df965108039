#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ttla {

// Deterministic fan-out: fn(i) fills slot i of a caller-owned results array;
// aggregation order is the index order regardless of the worker count.
inline void parallelFor(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<std::size_t>(jobs, count);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace ttla
