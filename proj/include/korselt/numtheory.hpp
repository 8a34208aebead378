#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "korselt/error.hpp"

namespace korselt {

using i128 = __int128;
using u128 = unsigned __int128;

// Checked arithmetic. Every helper throws OverflowError instead of wrapping.

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
    return r;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit subtraction overflow");
    return r;
}

/// Narrow to 64 bits, throwing if the value does not fit.
std::int64_t narrow_i64(i128 v);

std::int64_t checked_mul64(std::int64_t a, std::int64_t b);

std::string to_string(i128 v);

i128 gcd(i128 a, i128 b);

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Full factorization of n >= 1 in increasing prime order (empty for 1).
/// Trial division by small primes, then Pollard-Brent rho for the cofactor.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Distinct prime factors of a squarefree n >= 2, strictly increasing.
/// Throws NotSquarefree when some prime divides n twice.
std::vector<std::int64_t> factor_squarefree(std::int64_t n);

bool is_squarefree(std::int64_t n);

/// Positive divisors of m in increasing order.
std::vector<std::int64_t> divisors(std::int64_t m);
std::vector<std::int64_t> divisors(const std::vector<PrimePower>& factorization);

/// Every nonzero d with d | m, both signs, sorted ascending.
std::vector<std::int64_t> signed_divisors(std::int64_t m);
std::vector<std::int64_t> signed_divisors(const std::vector<PrimePower>& factorization);

/// Multiply two factorizations (exponents add).
std::vector<PrimePower> merge_factorizations(const std::vector<PrimePower>& a,
                                             const std::vector<PrimePower>& b);

/// A reduced fraction num/den with den >= 1 and gcd(|num|, den) = 1.
class Rational {
public:
    constexpr Rational() = default;
    /// Integer value n/1.
    constexpr explicit Rational(std::int64_t n) : num_(n), den_(1) {}

    /// Reduces and normalizes the sign. Throws ZeroDenominator or OverflowError.
    static Rational make(i128 num, i128 den);

    /// Parses "a" or "a/b" (optional leading '-'); throws ParseError or ZeroDenominator.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// "a/b" in lowest terms, or "a" for integers.
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Reduced representative of num/den with positive denominator.
inline Rational make_rational(i128 num, i128 den) { return Rational::make(num, den); }

}  // namespace korselt
