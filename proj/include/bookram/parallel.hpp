#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace bookram {

// Thread cap: explicit argument wins, then BOOKRAM_THREADS, then hardware.
inline int resolve_thread_cap(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BOOKRAM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Evaluates f(0..count-1) across up to `threads` workers. Results land in
// index order, so the aggregate is independent of scheduling.
template <typename T, typename F>
std::vector<T> run_indexed(int count, int threads, F&& f) {
    std::vector<T> results(static_cast<std::size_t>(count));
    if (count == 0) return results;
    int workers = std::min(std::max(threads, 1), count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = f(i);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                results[static_cast<std::size_t>(i)] = f(i);
            }
        });
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace bookram
