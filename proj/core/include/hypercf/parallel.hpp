#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hypercf {

// Worker count: HYPERCF_THREADS if set and positive, else the hardware concurrency.
std::size_t worker_count();

// Runs f(0) .. f(n-1) on up to worker_count() threads. Results are stored by
// index, so output order never depends on scheduling. The first exception is
// rethrown after all workers finish.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
    const std::size_t workers = std::min(worker_count(), n);
    auto run = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace hypercf
