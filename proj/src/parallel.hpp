#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pbun::detail {

/// Evaluates fn(i) for i in [0, n) on up to `jobs` threads and returns the
/// results in index order.
template <typename Fn>
auto parallel_map(std::size_t n, unsigned jobs, Fn fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<Result> out(n);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                try {
                    for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = n;
                }
            });
        }
    }
    // First exception wins; the other workers stop at their next index.
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace pbun::detail
