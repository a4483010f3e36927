#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace permstat {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads and returns the results in index order,
// so any reduction over them is independent of scheduling. The first exception is rethrown.
template <class T, class Fn>
std::vector<T> map_chunks(int count, int jobs, Fn fn) {
    std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)));
    const int workers = std::min(resolve_jobs(jobs), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace permstat
