#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace knotgas {

/// Resolves a requested thread count: 0 means hardware concurrency, and the
/// result never exceeds the amount of work.
inline int resolve_threads(int requested, std::size_t work_items) {
    int n = requested;
    if (n <= 0)
        n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1)
        n = 1;
    if (static_cast<std::size_t>(n) > work_items)
        n = static_cast<int>(work_items);
    return n;
}

/// Runs fn(i) for i in [0, count). Each index owns its output slot, so the
/// result is identical regardless of scheduling. fn must not throw; wrap
/// per-index failures into the output instead.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (count == 0)
        return;
    const int n = resolve_threads(threads, count);
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace knotgas
