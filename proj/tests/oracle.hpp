#pragma once

// Test-only brute-force references. Nothing here calls into the library's
// enumeration code; values are recomputed from the raw definitions.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

/// a1/a2 (a2 > 0, reduced) is an N-Korselt base of N = p*q, straight from the definition.
inline bool is_base(std::int64_t p, std::int64_t q, std::int64_t a1, std::int64_t a2) {
    const std::int64_t n = p * q;
    if (a1 == 0 || (a2 == 1 && a1 == n)) return false;
    const std::int64_t big = a2 * n - a1;
    const std::int64_t dp = a2 * p - a1;
    const std::int64_t dq = a2 * q - a1;
    return dp != 0 && dq != 0 && big % dp == 0 && big % dq == 0;
}

/// Integer bases of pq found by scanning every beta in [-2N, 2N].
inline std::vector<std::int64_t> z_set(std::int64_t p, std::int64_t q) {
    std::vector<std::int64_t> out;
    const std::int64_t n = p * q;
    for (std::int64_t b = -2 * n; b <= 2 * n; ++b)
        if (is_base(p, q, b, 1)) out.push_back(b);
    return out;
}

inline std::vector<bool> sieve(std::int64_t limit) {
    std::vector<bool> prime(static_cast<std::size_t>(limit) + 1, true);
    prime[0] = false;
    if (limit >= 1) prime[1] = false;
    for (std::int64_t k = 2; k * k <= limit; ++k)
        if (prime[k])
            for (std::int64_t m = k * k; m <= limit; m += k) prime[m] = false;
    return prime;
}

inline std::int64_t divisor_count(std::int64_t m) {
    std::int64_t c = 0;
    for (std::int64_t d = 1; d <= m; ++d)
        if (m % d == 0) ++c;
    return c;
}

}  // namespace oracle
