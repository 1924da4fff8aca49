#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wzaudit {

/// results[i] = fn(i) for i < count, computed on up to `jobs` threads.
/// Result order is independent of scheduling. The first exception thrown by
/// any call is rethrown after all workers stop.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<R> results(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> threads;
    const unsigned n_threads = jobs < count ? jobs : static_cast<unsigned>(count);
    for (unsigned t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    threads.clear();
    if (failure) std::rethrow_exception(failure);
    return results;
}

/// Parallelism from WZAUDIT_JOBS, else hardware concurrency.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("WZAUDIT_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace wzaudit
