#include "korselt/korselt_set.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_map>

namespace korselt {

namespace {

bool is_excluded_value(std::int64_t n, const Rational& alpha) {
    return alpha.is_zero() || (alpha.is_integer() && alpha.num() == n);
}

std::vector<PrimePower> factorize_product(std::int64_t prime, std::int64_t cofactor) {
    return merge_factorizations({{static_cast<std::uint64_t>(prime), 1}},
                                factorize(static_cast<std::uint64_t>(cofactor)));
}

KorseltSet make_set(const Semiprime& sp, std::vector<Rational> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    KorseltSet ks{sp, {}, {}};
    for (const Rational& a : elements) {
        if (a.is_integer())
            ks.integer_part.push_back(a.num());
        else
            ks.fractional_part.push_back(a);
    }
    return ks;
}

}  // namespace

Semiprime Semiprime::from_primes(std::int64_t p, std::int64_t q) {
    if (p > q) std::swap(p, q);
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || !is_prime(static_cast<std::uint64_t>(q)))
        throw NotSemiprime("both factors must be prime: " + std::to_string(p) + ", " + std::to_string(q));
    if (p == q) throw NotSquarefree(std::to_string(p) + "^2 is not squarefree");
    Semiprime sp;
    sp.p = p;
    sp.q = q;
    sp.n = checked_mul64(p, q);
    sp.i = q / p;
    sp.s = q % p;
    return sp;
}

Semiprime Semiprime::from_n(std::int64_t n) {
    if (n < 2) throw NotSemiprime(std::to_string(n) + " is not a semiprime");
    const auto primes = factor_squarefree(n);
    if (primes.size() != 2)
        throw NotSemiprime(std::to_string(n) + " has " + std::to_string(primes.size()) +
                           " prime factor(s), expected 2");
    return from_primes(primes[0], primes[1]);
}

std::vector<Rational> KorseltSet::all() const {
    std::vector<Rational> out(fractional_part.begin(), fractional_part.end());
    for (std::int64_t b : integer_part) out.emplace_back(b);
    std::sort(out.begin(), out.end());
    return out;
}

bool KorseltSet::contains(const Rational& alpha) const {
    if (alpha.is_integer()) return contains_integer(alpha.num());
    return std::binary_search(fractional_part.begin(), fractional_part.end(), alpha);
}

bool KorseltSet::contains_integer(std::int64_t beta) const {
    return std::binary_search(integer_part.begin(), integer_part.end(), beta);
}

bool is_korselt_base(std::int64_t n, std::span<const std::int64_t> primes, const Rational& alpha) {
    if (is_excluded_value(n, alpha)) return false;
    const i128 a1 = alpha.num();
    const i128 a2 = alpha.den();
    const i128 dividend = a2 * n - a1;
    for (std::int64_t r : primes) {
        const i128 d = a2 * r - a1;
        if (d == 0 || dividend % d != 0) return false;
    }
    return true;
}

bool is_korselt_base(std::int64_t n, const Rational& alpha) {
    const auto primes = factor_squarefree(n);
    if (primes.size() < 2) throw Error(std::to_string(n) + " is prime, not a squarefree composite");
    return is_korselt_base(n, primes, alpha);
}

BaseCheck korselt_base_breakdown(std::int64_t n, const Rational& alpha) {
    const auto primes = factor_squarefree(n);
    if (primes.size() < 2) throw Error(std::to_string(n) + " is prime, not a squarefree composite");
    BaseCheck check;
    check.excluded_value = is_excluded_value(n, alpha);
    const i128 a1 = alpha.num();
    const i128 a2 = alpha.den();
    bool all_divide = true;
    for (std::int64_t r : primes) {
        PrimeCondition c;
        c.prime = r;
        c.divisor = a2 * r - a1;
        c.dividend = a2 * n - a1;
        c.divides = c.divisor != 0 && c.dividend % c.divisor == 0;
        all_divide = all_divide && c.divides;
        check.conditions.push_back(c);
    }
    check.is_base = all_divide && !check.excluded_value;
    return check;
}

bool is_carmichael(std::int64_t n) {
    if (n < 2) return false;
    const auto f = factorize(static_cast<std::uint64_t>(n));
    if (f.size() < 2) return false;
    for (const auto& [prime, exponent] : f) {
        if (exponent > 1) return false;
        if ((n - 1) % static_cast<std::int64_t>(prime - 1) != 0) return false;
    }
    return true;
}

KorseltSet q_korselt_set(const Semiprime& sp) {
    const std::int64_t p = sp.p;
    const std::int64_t q = sp.q;
    const std::int64_t gap = q - p;
    const std::array<std::int64_t, 2> primes = {p, q};

    const auto dps = signed_divisors(factorize_product(p, q - 1));
    const auto dqs = signed_divisors(factorize_product(q, p - 1));

    // d_q - d_p must be a positive multiple of q - p, so only same-residue pairs matter.
    std::unordered_map<std::int64_t, std::vector<std::int64_t>> by_residue;
    for (std::int64_t dq : dqs) by_residue[((dq % gap) + gap) % gap].push_back(dq);

    std::vector<Rational> found;
    for (std::int64_t dp : dps) {
        const auto it = by_residue.find(((dp % gap) + gap) % gap);
        if (it == by_residue.end()) continue;
        for (std::int64_t dq : it->second) {
            if (dq <= dp) continue;
            const i128 a2 = (static_cast<i128>(dq) - dp) / gap;
            const i128 a1 = checked_sub(checked_mul(a2, p), dp);
            if (gcd(a1, a2) != 1) continue;
            const Rational alpha = Rational::make(a1, a2);
            if (is_korselt_base(sp.n, primes, alpha)) found.push_back(alpha);
        }
    }
    return make_set(sp, std::move(found));
}

KorseltSet q_korselt_set_oracle(const Semiprime& sp) {
    if (sp.n > kOracleLimit)
        throw ScaleGuard("oracle limited to N <= " + std::to_string(kOracleLimit) + ", got " +
                         std::to_string(sp.n));
    const std::int64_t p = sp.p;
    const std::int64_t q = sp.q;
    const std::int64_t n = sp.n;
    const std::int64_t max_den = (p * (q - 1) + q * (p - 1)) / (q - p);
    const auto base_factors = factorize_product(p, q - 1);

    std::vector<Rational> found;
    for (std::int64_t a2 = 1; a2 <= max_den; ++a2) {
        // a2*N - a1 = (a2*p - a1) + a2*p*(q-1), so a2*p - a1 must divide a2*p*(q-1).
        const auto modulus = merge_factorizations(base_factors, factorize(static_cast<std::uint64_t>(a2)));
        for (std::int64_t d : signed_divisors(modulus)) {
            const std::int64_t a1 = a2 * p - d;
            if (std::gcd(a1, a2) != 1 || a1 == 0) continue;
            if (a2 == 1 && a1 == n) continue;
            const std::int64_t big = a2 * n - a1;
            const std::int64_t dp = a2 * p - a1;
            const std::int64_t dq = a2 * q - a1;
            if (dp != 0 && dq != 0 && big % dp == 0 && big % dq == 0)
                found.push_back(Rational::make(a1, a2));
        }
    }
    return make_set(sp, std::move(found));
}

std::vector<std::int64_t> z_korselt_set(const Semiprime& sp) {
    const std::int64_t p = sp.p;
    const std::int64_t q = sp.q;
    const std::int64_t n = sp.n;
    std::vector<std::int64_t> out;
    for (std::int64_t d : signed_divisors(factorize_product(p, q - 1))) {
        const std::int64_t beta = p + d;
        if (beta == 0 || beta == n || beta == q) continue;
        if ((n - beta) % (p - beta) == 0 && (n - beta) % (q - beta) == 0) out.push_back(beta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

KorseltWeights korselt_weights(const KorseltSet& ks) {
    return {ks.integer_part.size(), ks.fractional_part.size(),
            ks.integer_part.size() + ks.fractional_part.size()};
}

}  // namespace korselt
