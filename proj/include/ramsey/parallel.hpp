#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ramsey {

/// base^exp, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
        result *= base;
    }
    return result;
}

/// Least index in [0, n) where pred holds, or n when none. The index space is
/// split into contiguous per-worker chunks scanned in ascending order, and a
/// shared best-so-far lets workers past it stop, so the result is independent
/// of the worker count.
inline std::uint64_t parallel_least_index(std::uint64_t n, int workers,
                                          const std::function<bool(std::uint64_t)>& pred) {
    if (n == 0) return 0;
    if (workers <= 1 || n < 1024) {
        for (std::uint64_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return n;
    }
    const std::uint64_t nworkers = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), n);
    std::atomic<std::uint64_t> best{n};
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    const std::uint64_t chunk = (n + nworkers - 1) / nworkers;
    for (std::uint64_t w = 0; w < nworkers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(n, lo + chunk);
        threads.emplace_back([&, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (i >= best.load(std::memory_order_relaxed)) return;
                if (pred(i)) {
                    std::uint64_t cur = best.load(std::memory_order_relaxed);
                    while (i < cur &&
                           !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    return best.load();
}

}  // namespace ramsey
