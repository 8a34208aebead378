#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "korselt/numtheory.hpp"
#include "oracle.hpp"

using namespace korselt;

TEST_CASE("is_prime small values") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(97));
}

TEST_CASE("is_prime agrees with a sieve up to 10^6") {
    const std::int64_t limit = 1'000'000;
    const auto prime = oracle::sieve(limit);
    std::int64_t mismatches = 0;
    for (std::int64_t n = 0; n <= limit; ++n)
        if (is_prime(static_cast<std::uint64_t>(n)) != prime[n]) ++mismatches;
    CHECK(mismatches == 0);
}

TEST_CASE("is_prime on large inputs and strong pseudoprimes") {
    CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK(is_prime(9223372036854775783ULL));  // 2^63 - 25
    CHECK_FALSE(is_prime(9223372036854775807ULL));
    // Strong pseudoprimes to every prime base up to 7 and up to 23.
    CHECK_FALSE(is_prime(3215031751ULL));
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK_FALSE(is_prime(1000003ULL * 1000033ULL));
}

TEST_CASE("factor_squarefree") {
    CHECK(factor_squarefree(22) == std::vector<std::int64_t>{2, 11});
    CHECK(factor_squarefree(6499) == std::vector<std::int64_t>{67, 97});
    CHECK(factor_squarefree(561) == std::vector<std::int64_t>{3, 11, 17});
    CHECK_THROWS_AS(factor_squarefree(12), NotSquarefree);
    CHECK_THROWS_AS(factor_squarefree(1009LL * 1009LL * 3LL), NotSquarefree);
    CHECK_THROWS_AS(factor_squarefree(1), Error);
    // Two large primes, well past trial division.
    CHECK(factor_squarefree(1000003LL * 2147483647LL) == std::vector<std::int64_t>{1000003, 2147483647});
}

TEST_CASE("factor_squarefree multiplies back for every squarefree n <= 10^6") {
    const auto prime = oracle::sieve(1'000'000);
    std::int64_t bad = 0;
    std::int64_t checked = 0;
    for (std::int64_t n = 2; n <= 1'000'000; ++n) {
        if (!is_squarefree(n)) continue;
        const auto f = factor_squarefree(n);
        std::int64_t product = 1;
        for (std::size_t k = 0; k < f.size(); ++k) {
            product *= f[k];
            if (!prime[f[k]] || (k > 0 && f[k - 1] >= f[k])) ++bad;
        }
        if (product != n) ++bad;
        ++checked;
    }
    CHECK(bad == 0);
    CHECK(checked == 607925);  // squarefree integers in [2, 10^6]
}

TEST_CASE("factorize handles prime powers") {
    const auto f = factorize(2ULL * 2 * 2 * 3 * 3 * 1000003ULL * 1000003ULL);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == PrimePower{2, 3});
    CHECK(f[1] == PrimePower{3, 2});
    CHECK(f[2] == PrimePower{1000003, 2});
    CHECK(factorize(1).empty());
}

TEST_CASE("signed_divisors examples") {
    CHECK(signed_divisors(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(signed_divisors(6) == std::vector<std::int64_t>{-6, -3, -2, -1, 1, 2, 3, 6});
    CHECK(signed_divisors(90).size() == static_cast<std::size_t>(2 * oracle::divisor_count(90)));
    CHECK(signed_divisors(90).size() == 24);
}

TEST_CASE("signed_divisors matches trial division for m <= 10^4") {
    for (std::int64_t m = 1; m <= 10'000; ++m) {
        std::vector<std::int64_t> positive;
        for (std::int64_t d = 1; d <= m; ++d)
            if (m % d == 0) positive.push_back(d);
        const auto got = signed_divisors(m);
        REQUIRE(got.size() == 2 * positive.size());
        REQUIRE(std::is_sorted(got.begin(), got.end()));
        std::vector<std::int64_t> upper(got.begin() + static_cast<std::ptrdiff_t>(positive.size()), got.end());
        REQUIRE(upper == positive);
        for (std::int64_t d : got) REQUIRE(m % (d < 0 ? -d : d) == 0);
    }
}

TEST_CASE("make_rational") {
    CHECK(make_rational(14, 4) == Rational::make(7, 2));
    CHECK(make_rational(14, 4).num() == 7);
    CHECK(make_rational(14, 4).den() == 2);
    CHECK(make_rational(-3, -6).num() == 1);
    CHECK(make_rational(-3, -6).den() == 2);
    CHECK(make_rational(95, 9).str() == "95/9");
    CHECK(make_rational(3, -6).str() == "-1/2");
    CHECK(make_rational(0, -5).str() == "0");
    CHECK(make_rational(10, 5).str() == "2");
    CHECK_THROWS_AS(make_rational(1, 0), ZeroDenominator);
}

TEST_CASE("make_rational is canonical under scaling") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<std::int64_t> value(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> scale(-100'000, 100'000);
    for (int trial = 0; trial < 20'000; ++trial) {
        const std::int64_t a = value(rng);
        std::int64_t b = value(rng);
        std::int64_t k = scale(rng);
        if (b == 0) b = 1;
        if (k == 0) k = -7;
        const Rational r = make_rational(a, b);
        REQUIRE(make_rational(static_cast<i128>(a) * k, static_cast<i128>(b) * k) == r);
        REQUIRE(r.den() >= 1);
        REQUIRE(gcd(r.num(), r.den()) == 1);
    }
}

TEST_CASE("rational ordering is exact") {
    CHECK(Rational::make(12, 5) < Rational::make(5, 2));
    CHECK(Rational::make(-1, 3) < Rational::make(0, 1));
    CHECK(Rational::make(9, 4) > Rational::make(2, 1));
    // Equal as doubles, different as rationals.
    const std::int64_t big = 4'000'000'000'000'000'000LL;
    CHECK(Rational::make(big, big - 1) > Rational::make(big + 1, big));
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("7/2") == Rational::make(7, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-3/6") == Rational::make(-1, 2));
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("7/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("5/0"), ZeroDenominator);
    CHECK_THROWS_AS(Rational::parse("99999999999999999999"), OverflowError);
}

TEST_CASE("overflow is reported, never wrapped") {
    const i128 huge = static_cast<i128>(1) << 100;
    CHECK_THROWS_AS(checked_mul(huge, huge), OverflowError);
    CHECK_THROWS_AS(checked_add(huge * (static_cast<i128>(1) << 26), huge * (static_cast<i128>(1) << 26)),
                    OverflowError);
    CHECK_THROWS_AS(narrow_i64(huge), OverflowError);
    CHECK_THROWS_AS(Rational::make(huge, 3), OverflowError);
    CHECK_THROWS_AS(checked_mul64(1LL << 40, 1LL << 40), OverflowError);
    CHECK(to_string(-huge) == "-1267650600228229401496703205376");
}
