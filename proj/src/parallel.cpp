#include "hirenet/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace hirenet {

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), n);
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(lo + chunk, n);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace hirenet
