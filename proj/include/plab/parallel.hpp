#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace plab {

// Worker budget for trial fan-out: PLANCHEREL_LAB_THREADS wins when set,
// otherwise the hardware count.
inline int worker_count() {
    if (const char* env = std::getenv("PLANCHEREL_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs body(trial) for trial = 0..trials-1 across workers. Each trial must
// derive its randomness from its own index and write only to its own slot;
// results are then identical for any worker count. The first exception is
// rethrown after all workers stop.
template <class Body>
void parallel_for_trials(long long trials, Body&& body) {
    const int workers = static_cast<int>(std::min<long long>(worker_count(), trials));
    if (workers <= 1) {
        for (long long t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                if (failed.load(std::memory_order_relaxed)) return;
                const long long t = next.fetch_add(1, std::memory_order_relaxed);
                if (t >= trials) return;
                try {
                    body(t);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(error_lock);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace plab
