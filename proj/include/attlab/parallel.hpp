#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace attlab {

/// Runs f(i) for i in [0, n) across worker threads. Callers write results
/// into per-index slots, so the aggregate is independent of scheduling.
template <class F>
void parallel_for(int n, F&& f, int threads = 0) {
    if (n <= 0) return;
    if (threads <= 0) threads = int(std::thread::hardware_concurrency());
    if (threads <= 1 || n == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    threads = std::min(threads, n);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed && error) std::rethrow_exception(error);
}

}  // namespace attlab
