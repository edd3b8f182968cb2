#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace coverhom {

namespace detail {
inline std::atomic<unsigned>& thread_setting() {
    static std::atomic<unsigned> value{1};
    return value;
}
} // namespace detail

inline unsigned thread_count() { return detail::thread_setting().load(); }

inline void set_thread_count(unsigned n) { detail::thread_setting().store(n == 0 ? 1 : n); }

/// Runs f(0), ..., f(n-1), possibly on several threads. Each index is
/// processed exactly once, so writers to preallocated slots get the same
/// result regardless of the thread count.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace coverhom
