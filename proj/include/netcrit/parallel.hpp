#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace netcrit::detail {

// Runs fn(i) for i in [0, count) across up to hardware_concurrency threads.
// Each index is processed exactly once; callers keep determinism by writing
// into index-addressed slots and combining in index order afterwards.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (count < 2 * workers) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace netcrit::detail
