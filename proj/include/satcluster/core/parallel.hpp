#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace satcluster {

/// Runs fn(i) for i in [0, count) across up to n_threads workers with a
/// static block partition. Results must be written to disjoint slots so the
/// outcome is identical to the serial loop. First exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned n_threads, Fn&& fn) {
    if (count == 0) return;
    if (n_threads == 0) n_threads = std::thread::hardware_concurrency();
    if (n_threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(n_threads, count);
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mu;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = count * w / workers;
        const std::size_t hi = count * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace satcluster
