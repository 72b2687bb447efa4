#ifndef TAILSUM_PARALLEL_HPP
#define TAILSUM_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace tailsum {

// Static contiguous partition of [0, count) across workers. Chunk boundaries
// depend only on (count, workers); work items must be independent.
template <class Fn>
void parallel_for_chunks(std::int64_t count, int workers, Fn&& chunk_fn) {
    if (workers <= 1 || count < 2) {
        chunk_fn(0, std::int64_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = count * w / workers;
        const std::int64_t hi = count * (w + 1) / workers;
        threads.emplace_back([&chunk_fn, w, lo, hi] { chunk_fn(w, lo, hi); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace tailsum

#endif
