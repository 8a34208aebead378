#include "korselt/numtheory.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <numeric>

namespace korselt {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// The first twelve primes as witnesses are sufficient for n < 3.3 * 10^24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr std::uint64_t kTrialLimit = 1000;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Pollard-Brent; n must be odd, composite and not a perfect power of a small prime.
std::uint64_t pollard_brent(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
        const std::uint64_t block = 128;
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        for (std::uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += block) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

void append_divisors(const std::vector<PrimePower>& f, std::vector<std::int64_t>& out) {
    out.assign(1, 1);
    for (const auto& [prime, exponent] : f) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int e = 1; e <= exponent; ++e) {
            pk = checked_mul64(pk, static_cast<std::int64_t>(prime));
            for (std::size_t j = 0; j < base; ++j) out.push_back(checked_mul64(out[j], pk));
        }
    }
    std::sort(out.begin(), out.end());
}

}  // namespace

std::int64_t narrow_i64(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw OverflowError("value " + to_string(v) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t checked_mul64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiplication overflow");
    return r;
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    u128 u = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

i128 gcd(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;

    const int shift = __builtin_ctzll(n - 1);
    const std::uint64_t d = (n - 1) >> shift;
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < shift; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> result;
    if (n == 0) throw Error("factorize: n must be positive");
    for (std::uint64_t p = 2; p < kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        result.push_back({p, e});
    }
    if (n > 1) {
        std::vector<std::uint64_t> primes;
        factor_into(n, primes);
        std::sort(primes.begin(), primes.end());
        for (std::uint64_t p : primes) {
            if (!result.empty() && result.back().prime == p)
                ++result.back().exponent;
            else
                result.push_back({p, 1});
        }
    }
    return result;
}

std::vector<std::int64_t> factor_squarefree(std::int64_t n) {
    if (n < 2) throw Error("factor_squarefree: n must be >= 2, got " + std::to_string(n));
    std::vector<std::int64_t> primes;
    for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(n))) {
        if (e > 1)
            throw NotSquarefree(std::to_string(n) + " is not squarefree (" + std::to_string(p) +
                                "^2 divides it)");
        primes.push_back(static_cast<std::int64_t>(p));
    }
    return primes;
}

bool is_squarefree(std::int64_t n) {
    if (n < 1) return false;
    const auto f = factorize(static_cast<std::uint64_t>(n));
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<std::int64_t> divisors(const std::vector<PrimePower>& factorization) {
    std::vector<std::int64_t> out;
    append_divisors(factorization, out);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
    if (m < 1) throw Error("divisors: m must be >= 1");
    return divisors(factorize(static_cast<std::uint64_t>(m)));
}

std::vector<std::int64_t> signed_divisors(const std::vector<PrimePower>& factorization) {
    const auto positive = divisors(factorization);
    std::vector<std::int64_t> out;
    out.reserve(2 * positive.size());
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), positive.begin(), positive.end());
    return out;
}

std::vector<std::int64_t> signed_divisors(std::int64_t m) {
    if (m < 1) throw Error("signed_divisors: m must be >= 1");
    return signed_divisors(factorize(static_cast<std::uint64_t>(m)));
}

std::vector<PrimePower> merge_factorizations(const std::vector<PrimePower>& a,
                                             const std::vector<PrimePower>& b) {
    std::vector<PrimePower> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->prime < ib->prime)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->prime < ia->prime) {
            out.push_back(*ib++);
        } else {
            out.push_back({ia->prime, ia->exponent + ib->exponent});
            ++ia;
            ++ib;
        }
    }
    return out;
}

Rational Rational::make(i128 num, i128 den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    const i128 g = gcd(num, den);
    Rational r;
    r.num_ = narrow_i64(num / g);
    r.den_ = narrow_i64(den / g);
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        if (part.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
        if (*first == '+') throw ParseError("unexpected '+' in rational '" + std::string(text) + "'");
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range)
            throw OverflowError("integer out of range in '" + std::string(text) + "'");
        if (ec != std::errc() || ptr != last)
            throw ParseError("malformed rational '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    return make(num, den);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace korselt
