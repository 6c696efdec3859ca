#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "govsym/common.hpp"

namespace govsym {

inline int default_threads() {
    if (const char* env = std::getenv("GOVSYM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Split [lo, hi) into fixed-size chunks, evaluate chunk_fn on each (possibly
/// on several threads), and fold the per-chunk results in chunk order. The
/// chunk grid depends only on (lo, hi, chunk), so the result is bit-identical
/// for every thread count.
template <class R, class ChunkFn, class MergeFn>
R chunked_reduce(i64 lo, i64 hi, i64 chunk, int threads, R init, ChunkFn&& chunk_fn,
                 MergeFn&& merge) {
    if (hi <= lo) return init;
    const i64 nchunks = (hi - lo + chunk - 1) / chunk;
    std::vector<R> results(static_cast<std::size_t>(nchunks));
    if (threads <= 1 || nchunks == 1) {
        for (i64 c = 0; c < nchunks; ++c) {
            i64 a = lo + c * chunk;
            i64 b = std::min(hi, a + chunk);
            results[static_cast<std::size_t>(c)] = chunk_fn(a, b);
        }
    } else {
        std::atomic<i64> next{0};
        auto worker = [&] {
            for (;;) {
                i64 c = next.fetch_add(1);
                if (c >= nchunks) return;
                i64 a = lo + c * chunk;
                i64 b = std::min(hi, a + chunk);
                results[static_cast<std::size_t>(c)] = chunk_fn(a, b);
            }
        };
        std::vector<std::thread> pool;
        int n = std::min<i64>(threads, nchunks);
        pool.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    R acc = std::move(init);
    for (auto& r : results) acc = merge(std::move(acc), std::move(r));
    return acc;
}

}  // namespace govsym
