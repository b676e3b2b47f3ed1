#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace termnet {

/// 0 or negative means "use hardware concurrency".
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n). Each index is visited exactly once; fn must not
/// touch state shared across indices. Results are therefore identical for any
/// worker count.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& th : threads) th.join();
}

}  // namespace termnet
