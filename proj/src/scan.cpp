#include "korselt/scan.hpp"

namespace korselt {

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t k = 2; k <= limit; ++k) {
        if (composite[k]) continue;
        primes.push_back(k);
        for (std::int64_t m = k * k; m <= limit; m += k) composite[m] = true;
    }
    return primes;
}

std::vector<Semiprime> semiprimes_in_range(std::int64_t p_max, std::int64_t q_max) {
    std::vector<Semiprime> out;
    const auto primes = primes_up_to(q_max);
    for (std::size_t a = 0; a < primes.size() && primes[a] <= p_max; ++a)
        for (std::size_t b = a + 1; b < primes.size(); ++b)
            out.push_back(Semiprime::from_primes(primes[a], primes[b]));
    std::sort(out.begin(), out.end(), [](const Semiprime& x, const Semiprime& y) { return x.n < y.n; });
    return out;
}

unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace korselt
