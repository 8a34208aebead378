#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "korselt/numtheory.hpp"

namespace korselt {

/// N = p*q with primes p < q, and the division q = i*p + s, 1 <= s <= p-1.
struct Semiprime {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::int64_t i = 0;
    std::int64_t s = 0;

    /// Validates both primes; the order of the arguments does not matter.
    static Semiprime from_primes(std::int64_t p, std::int64_t q);

    /// Throws NotSquarefree for non-squarefree n, NotSemiprime otherwise.
    static Semiprime from_n(std::int64_t n);

    /// The universal base p+q-1.
    std::int64_t universal_base() const { return p + q - 1; }

    friend bool operator==(const Semiprime&, const Semiprime&) = default;
};

/// Q-KS(N) split by denominator. Both parts are sorted ascending.
struct KorseltSet {
    Semiprime n;
    std::vector<std::int64_t> integer_part;
    std::vector<Rational> fractional_part;

    /// Every element in ascending order.
    std::vector<Rational> all() const;

    bool contains(const Rational& alpha) const;
    bool contains_integer(std::int64_t beta) const;

    friend bool operator==(const KorseltSet&, const KorseltSet&) = default;
};

struct KorseltWeights {
    std::size_t z_weight = 0;
    std::size_t qz_weight = 0;
    std::size_t q_weight = 0;

    friend bool operator==(const KorseltWeights&, const KorseltWeights&) = default;
};

/// One prime's share of the base predicate: divisor = a2*r - a1 must divide a2*N - a1.
struct PrimeCondition {
    std::int64_t prime = 0;
    i128 divisor = 0;
    i128 dividend = 0;
    bool divides = false;
};

struct BaseCheck {
    bool is_base = false;
    bool excluded_value = false;  // alpha is 0 or N
    std::vector<PrimeCondition> conditions;
};

/// Predicate on an already-factored squarefree n (any number of prime factors).
bool is_korselt_base(std::int64_t n, std::span<const std::int64_t> primes, const Rational& alpha);

/// Factors n first; throws NotSquarefree if n is not squarefree.
bool is_korselt_base(std::int64_t n, const Rational& alpha);

/// Like is_korselt_base but keeps every prime's verdict, without short-circuiting.
BaseCheck korselt_base_breakdown(std::int64_t n, const Rational& alpha);

/// Korselt's criterion. False for primes and non-squarefree numbers.
bool is_carmichael(std::int64_t n);

/// Complete Q-KS(N) through divisor-pair enumeration:
/// a2*p - a1 divides p(q-1) and a2*q - a1 divides q(p-1).
KorseltSet q_korselt_set(const Semiprime& sp);

inline constexpr std::int64_t kOracleLimit = 1'000'000;

/// Independent exhaustive construction of Q-KS(N), for n <= kOracleLimit.
/// Loops over every denominator a2 up to (p(q-1) + q(p-1)) / (q-p) and every
/// numerator a1 for which a2*p - a1 divides a2*N - a1, testing the raw
/// definition. Throws ScaleGuard above the limit.
KorseltSet q_korselt_set_oracle(const Semiprime& sp);

/// Z-KS(N) by direct scan of integers beta with |beta - p| dividing p(q-1).
std::vector<std::int64_t> z_korselt_set(const Semiprime& sp);

KorseltWeights korselt_weights(const KorseltSet& ks);

}  // namespace korselt
