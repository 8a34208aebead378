#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "korselt/scan.hpp"
#include "korselt/theorems.hpp"
#include "oracle.hpp"

using namespace korselt;

namespace {

Semiprime sp(std::int64_t n) { return Semiprime::from_n(n); }

bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("beta maps to pq/(p+q-beta) when q < 2p") {
    // 4*3 - 15 = -3 | 45 and 4*5 - 15 = 5 | 45.
    REQUIRE(oracle::is_base(3, 5, 15, 4));
    const GeneratorOutcome g = gen_prop41(sp(15), 4);
    CHECK(g.hypotheses_met);
    REQUIRE(g.generated);
    CHECK(*g.generated == Rational::make(15, 4));
    CHECK(g.member == true);
    CHECK(g.equivalence == true);

    const GeneratorOutcome g6 = gen_prop41(sp(15), 6);
    CHECK_FALSE(g6.hypotheses_met);
    CHECK(has(g6.failed_hypotheses, "gcd(p, beta) = 1"));
    CHECK_FALSE(g6.generated);

    const GeneratorOutcome g7 = gen_prop41(sp(15), 7);
    CHECK_FALSE(g7.hypotheses_met);
    CHECK(has(g7.failed_hypotheses, "beta != p+q-1"));

    // Not a base: side conditions hold, the reverse direction is still evaluated.
    const GeneratorOutcome g10 = gen_prop41(sp(15), 10);
    CHECK_FALSE(g10.hypotheses_met);
    CHECK(g10.failed_hypotheses == std::vector<std::string>{"beta in Z-KS(N)"});
    CHECK(g10.equivalence == true);
    CHECK_FALSE(g10.generated);
    CHECK_FALSE(is_korselt_base(15, Rational::make(-15, 2)));

    CHECK(has(gen_prop41(sp(15), 8).failed_hypotheses, "gcd(pq, p+q-beta) = 1"));

    CHECK(has(gen_prop41(sp(22), 3).failed_hypotheses, "q = p + s (p < q < 2p)"));
}

TEST_CASE("ip in the integer set yields a fractional base") {
    const GeneratorOutcome g21 = gen_prop42(sp(21));
    CHECK(g21.source == 6);
    CHECK(g21.hypotheses_met);
    CHECK(g21.k1 == 2);
    CHECK(g21.generated == Rational::make(21, 5));
    CHECK(g21.member == true);

    const GeneratorOutcome g22 = gen_prop42(sp(22));
    CHECK(g22.source == 10);
    CHECK_FALSE(g22.hypotheses_met);
    CHECK_FALSE(g22.generated);

    // k1 = 1 although the statement asks for k1 >= 2; 2*3 - 11 = -5 | 55 and 2*11 - 11 = 11 | 55.
    REQUIRE(oracle::is_base(3, 11, 11, 2));
    const GeneratorOutcome g33 = gen_prop42(sp(33));
    CHECK(g33.hypotheses_met);
    CHECK(g33.k1 == 1);
    CHECK(g33.generated == Rational::make(11, 2));
    CHECK(g33.member == true);
}

TEST_CASE("(i+1)p in the integer set yields a fractional base") {
    // 5*5 - 13 = 12 | 312 and 5*13 - 13 = 52 | 312.
    REQUIRE(oracle::is_base(5, 13, 13, 5));
    const GeneratorOutcome g65 = gen_prop43(sp(65));
    CHECK(g65.source == 15);
    CHECK(g65.hypotheses_met);
    CHECK(g65.k1 == 2);
    CHECK(g65.generated == Rational::make(13, 5));
    CHECK(g65.member == true);

    const GeneratorOutcome g21 = gen_prop43(sp(21));
    CHECK_FALSE(g21.hypotheses_met);
    CHECK(has(g21.failed_hypotheses, "s > 1"));

    const GeneratorOutcome g22 = gen_prop43(sp(22));
    CHECK(g22.source == 12);
    CHECK_FALSE(g22.hypotheses_met);
    CHECK(g22.failed_hypotheses == std::vector<std::string>{"s > 1"});
}

TEST_CASE("q-p+1 in the integer set yields pq/(q-p+1) when 2p < q < 4p") {
    REQUIRE(oracle::is_base(5, 13, 65, 9));
    const GeneratorOutcome g65 = gen_prop44(sp(65));
    CHECK(g65.source == 9);
    CHECK(g65.hypotheses_met);
    CHECK(g65.generated == Rational::make(65, 9));
    CHECK(g65.member == true);

    // d_p = 37*19 - 1387 = -684 | 49932 and d_q = 37*73 - 1387 = 1314 | 49932.
    REQUIRE(oracle::is_base(19, 73, 1387, 37));
    const GeneratorOutcome g1387 = gen_prop44(sp(1387));
    CHECK(g1387.hypotheses_met);
    CHECK(g1387.generated == Rational::make(1387, 37));
    CHECK(g1387.member == true);

    const GeneratorOutcome g95 = gen_prop44(sp(95));
    CHECK_FALSE(g95.hypotheses_met);
    CHECK(g95.failed_hypotheses == std::vector<std::string>{"gcd(q+1, p) = 1"});
}

TEST_CASE("the N = 95 near miss is logged as excluded, not violated") {
    const ScanReport r = scan_claim(Claim::prop44, 19, 19);
    CHECK(r.holds());
    const auto it = std::find_if(r.excluded.begin(), r.excluded.end(), [](const ScanViolation& v) { return v.n == 95; });
    REQUIRE(it != r.excluded.end());
    CHECK(it->detail.find("95/9 is not a base") != std::string::npos);
}

TEST_CASE("integer-set connections for 2p < q < 3p") {
    const ClaimCheck c65 = verify_prop31(sp(65));
    CHECK(c65.verdict == Verdict::held);
    for (std::int64_t b : {11, 17, 9}) CHECK(oracle::is_base(5, 13, b, 1));

    const ClaimCheck c21 = verify_prop31(sp(21));
    CHECK(c21.verdict == Verdict::held);
    const auto z21 = z_korselt_set(sp(21));
    CHECK(std::binary_search(z21.begin(), z21.end(), 9));
    CHECK(std::binary_search(z21.begin(), z21.end(), 5));

    CHECK(verify_prop31(sp(10)).verdict == Verdict::held);  // 4 < 5 < 6
    CHECK_THROWS_AS(verify_prop31(sp(14)), RangeError);
    CHECK_THROWS_AS(verify_prop31(sp(22)), RangeError);
}

TEST_CASE("with q > 2p and q-p+1 not a base, integer bases lie in {ip, (i+1)p, p+q-1}") {
    CHECK(verify_cor32(sp(22)).verdict == Verdict::held);
    CHECK(verify_cor32(sp(26)).verdict == Verdict::held);
    CHECK_THROWS_AS(verify_cor32(sp(95)), HypothesisNotMet);
    CHECK_THROWS_AS(verify_cor32(sp(15)), HypothesisNotMet);
}

TEST_CASE("integer-set case analysis") {
    const ClaimCheck c22 = verify_structure(sp(22));
    CHECK(c22.label == "1");
    CHECK(c22.verdict == Verdict::held);

    const ClaimCheck c1387 = verify_structure(sp(1387));
    CHECK(c1387.label == "4a(i)");
    CHECK(c1387.verdict == Verdict::held);
    CHECK(z_korselt_set(sp(1387)) == std::vector<std::int64_t>{55, 76, 91});

    const ClaimCheck c15 = verify_structure(sp(15));
    CHECK(c15.label == "6");
    CHECK(c15.verdict == Verdict::held);

    // p = 3 with 6 < q < 18 outside the other cases.
    CHECK(verify_structure(sp(39)).verdict == Verdict::uncovered);
    CHECK(verify_structure(sp(51)).verdict == Verdict::uncovered);
}

TEST_CASE("the q = 4p-3 equality case fails at N = 85") {
    // 15 = 3p: 5 - 15 = -10 | 70 and 17 - 15 = 2 | 70, yet the stated set is {13, 21}.
    REQUIRE(oracle::z_set(5, 17) == std::vector<std::int64_t>{13, 15, 21});
    const ClaimCheck c = verify_structure(sp(85));
    CHECK(c.label == "4a(ii)");
    CHECK(c.verdict == Verdict::violated);
    CHECK(c.detail.find("unexpected {15}") != std::string::npos);
}

TEST_CASE("empty fractional part forces q = 2p+1 or q = 4p-3") {
    const KorseltSet ks14 = q_korselt_set(sp(14));
    CHECK(check_main_theorem(ks14).verdict == Verdict::not_applicable);
    CHECK(check_main_theorem(q_korselt_set(sp(22))).verdict == Verdict::held);
    CHECK(verify_main_theorem(7, 7).holds());

    const ScanReport r = verify_main_theorem(53, 53);
    CHECK(r.holds());
    std::vector<std::int64_t> empty_fraction;
    for (const ClaimCheck& c : r.entries)
        if (c.verdict == Verdict::held) empty_fraction.push_back(c.sp.n);
    CHECK(empty_fraction.size() == 26);
    CHECK(empty_fraction.front() == 22);
    CHECK(empty_fraction.back() == 611);
}

TEST_CASE("the converse implication fails at N = 6") {
    CHECK(verify_converse_failure());
    CHECK(Semiprime::from_n(6).universal_base() == 4);
    CHECK(q_korselt_set(sp(6)).fractional_part.size() == 8);
}

TEST_CASE("parity") {
    CHECK(check_parity(q_korselt_set(sp(6))).detail == "Q-KW = 9");
    CHECK(check_parity(q_korselt_set(sp(6))).verdict == Verdict::held);
    CHECK(check_parity(q_korselt_set(sp(21))).detail == "Q-KW = 9");
    const ScanReport r = conjecture_parity_scan(20, 100);
    CHECK(r.checked == semiprimes_in_range(20, 100).size());
    CHECK(r.count(Verdict::held) + r.count(Verdict::violated) == r.checked);
}

TEST_CASE("claims round-trip through their names") {
    for (Claim c : all_claims()) CHECK(parse_claim(claim_name(c)) == c);
    CHECK_THROWS_AS(parse_claim("prop45"), Error);
}

TEST_CASE("generator scans hold for q <= 300") {
    for (Claim c : {Claim::prop41, Claim::prop42, Claim::prop43, Claim::prop44, Claim::prop31, Claim::cor32}) {
        CAPTURE(claim_name(c));
        const ScanReport r = scan_claim(c, 300, 300);
        CHECK(r.holds());
        CHECK(r.count(Verdict::held) > 0);
    }
}

TEST_CASE("every generated base appears in the computed set") {
    for (const Semiprime& s : semiprimes_in_range(150, 150)) {
        const KorseltSet ks = q_korselt_set(s);
        for (const GeneratorOutcome& g : {gen_prop42(ks), gen_prop43(ks), gen_prop44(ks)}) {
            if (!g.generated) continue;
            REQUIRE(ks.contains(*g.generated));
            REQUIRE(g.generated->den() >= 2);
        }
        for (std::int64_t beta : ks.integer_part) {
            const GeneratorOutcome g = gen_prop41(ks, beta);
            if (g.generated) REQUIRE(ks.contains(*g.generated));
        }
    }
}

TEST_CASE("scan output does not depend on the worker count") {
    const ScanReport one = scan_claim(Claim::parity, 100, 100, 1);
    const ScanReport many = scan_claim(Claim::parity, 100, 100, 4);
    REQUIRE(one.entries.size() == many.entries.size());
    for (std::size_t k = 0; k < one.entries.size(); ++k) {
        CHECK(one.entries[k].sp == many.entries[k].sp);
        CHECK(one.entries[k].detail == many.entries[k].detail);
    }
    CHECK(std::is_sorted(one.entries.begin(), one.entries.end(),
                         [](const ClaimCheck& a, const ClaimCheck& b) { return a.sp.n < b.sp.n; }));
}

TEST_CASE("parallel_map rethrows worker failures") {
    const std::vector<int> items = {1, 2, 3, 4, 5, 6, 7, 8};
    CHECK_THROWS_AS(parallel_map(
                        items,
                        [](int v) {
                            if (v == 5) throw RangeError("boom");
                            return v;
                        },
                        3),
                    RangeError);
    CHECK(parallel_map(items, [](int v) { return v * v; }, 3) == std::vector<int>{1, 4, 9, 16, 25, 36, 49, 64});
}
