#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

#include "korselt/korselt_set.hpp"

namespace korselt {

/// Every semiprime p*q with p < q, p <= p_max, q <= q_max, ascending by N.
std::vector<Semiprime> semiprimes_in_range(std::int64_t p_max, std::int64_t q_max);

/// Primes in [2, limit], ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// Worker count used when the caller asks for 0 jobs.
unsigned default_jobs();

/// Applies fn to every element on `jobs` threads. Results keep input order,
/// so the output does not depend on scheduling. The first exception thrown
/// by any worker is rethrown on the calling thread.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned jobs = 0)
    -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    static_assert(!std::is_same_v<R, bool>, "std::vector<bool> elements cannot be written concurrently");
    std::vector<R> results(items.size());
    if (jobs == 0) jobs = default_jobs();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));

    if (jobs <= 1) {
        for (std::size_t k = 0; k < items.size(); ++k) results[k] = fn(items[k]);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= items.size()) return;
            try {
                results[k] = fn(items[k]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(items.size());
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace korselt
