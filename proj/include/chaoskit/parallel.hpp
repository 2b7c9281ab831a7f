#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace chaoskit {

// Worker cap from CHAOSKIT_THREADS (default: hardware concurrency).
inline unsigned thread_count() {
    if (const char* env = std::getenv("CHAOSKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(chunk_index, begin, end) over fixed-size chunks of [0, n).
// Chunk boundaries depend only on n, never on the worker count, so any
// per-chunk results can be reduced in chunk order with bit-identical
// totals for every CHAOSKIT_THREADS setting.
inline void parallel_chunks(std::size_t n, std::size_t chunk,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t nchunks = (n + chunk - 1) / chunk;
    unsigned workers = std::min<std::size_t>(thread_count(), nchunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk, std::min(n, (c + 1) * chunk));
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < nchunks; c += workers)
                fn(c, c * chunk, std::min(n, (c + 1) * chunk));
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace chaoskit
