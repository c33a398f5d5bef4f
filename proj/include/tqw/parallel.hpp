#ifndef TQW_PARALLEL_HPP
#define TQW_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tqw {

/// Worker count: min(TQW_THREADS if set, hardware concurrency), at least 1.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("TQW_THREADS")) {
        const long req = std::strtol(env, nullptr, 10);
        if (req >= 1 && static_cast<unsigned>(req) < hw) hw = static_cast<unsigned>(req);
    }
    return hw;
}

/// Runs fn(i) for i in [0, count) on up to thread_budget() threads. Each
/// index is processed exactly once; callers own any output slots, so results
/// are independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace tqw

#endif
