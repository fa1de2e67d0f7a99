#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace coinf::detail {

/// Run fn(begin, end) over [0, count) split into `threads` contiguous chunks.
/// Chunk boundaries depend only on (count, threads), so any writer that owns
/// its indices produces identical results for every thread count.
template <typename Fn>
void parallel_for(size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        fn(size_t{0}, count);
        return;
    }
    const size_t nthreads = std::min<size_t>(static_cast<size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const size_t chunk = (count + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
        const size_t begin = t * chunk;
        const size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace coinf::detail
