#include "korselt/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "korselt/scan.hpp"

namespace korselt {

namespace {

bool contains(const std::vector<std::int64_t>& sorted, std::int64_t v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

template <typename Range>
std::string braces(const Range& values) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& v : values) {
        if (!first) out << ", ";
        first = false;
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
            out << v.str();
        else
            out << v;
    }
    out << '}';
    return out.str();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) out += sep;
        out += parts[k];
    }
    return out;
}

bool in_fractional_part(const KorseltSet& ks, const Rational& alpha) {
    return !alpha.is_integer() && ks.contains(alpha);
}

// Fill generated/member from a candidate when every hypothesis held.
void finish(GeneratorOutcome& out, const KorseltSet& ks, const Rational& candidate) {
    out.generated = candidate;
    out.member = in_fractional_part(ks, candidate);
    out.detail = std::to_string(out.source) + " -> " + candidate.str() +
                 (*out.member ? " in (Q\\Z)-KS" : " NOT in (Q\\Z)-KS");
}

ClaimCheck from_outcome(const Semiprime& sp, const GeneratorOutcome& g) {
    ClaimCheck c{sp, Verdict::not_applicable, {}, {}};
    if (g.k1) c.label = *g.k1 == 1 ? "k1=1" : "k1>1";
    if (!g.hypotheses_met) {
        c.detail = g.failed_hypotheses.empty() ? g.detail : "unmet: " + join(g.failed_hypotheses, "; ");
        return c;
    }
    c.verdict = g.member.value_or(false) ? Verdict::held : Verdict::violated;
    c.detail = g.detail;
    if (g.k1) c.detail += " (k1=" + std::to_string(*g.k1) + ")";
    return c;
}

ClaimCheck check_prop41_all(const KorseltSet& ks) {
    const Semiprime& sp = ks.n;
    ClaimCheck c{sp, Verdict::not_applicable, "i=1", {}};
    if (sp.i != 1) {
        c.label.clear();
        c.detail = "unmet: q < 2p";
        return c;
    }
    // Forward direction: every integer base. Reverse: every fractional base of the form pq/m.
    std::set<std::int64_t> candidates(ks.integer_part.begin(), ks.integer_part.end());
    for (const Rational& a : ks.fractional_part) {
        const i128 scaled = static_cast<i128>(sp.n) * a.den();
        if (scaled % a.num() == 0) candidates.insert(narrow_i64(sp.p + sp.q - scaled / a.num()));
    }
    std::vector<std::string> evaluated;
    std::vector<std::string> broken;
    for (std::int64_t beta : candidates) {
        const GeneratorOutcome g = gen_prop41(ks, beta);
        if (!g.equivalence) continue;
        evaluated.push_back(std::to_string(beta));
        if (!*g.equivalence) broken.push_back(g.detail);
    }
    if (evaluated.empty()) {
        c.detail = "no beta satisfies the side conditions";
        return c;
    }
    c.verdict = broken.empty() ? Verdict::held : Verdict::violated;
    c.detail = broken.empty() ? "equivalence holds for beta in {" + join(evaluated, ", ") + "}"
                              : join(broken, "; ");
    return c;
}

ClaimCheck check_prop44_scan(const KorseltSet& ks) {
    const Semiprime& sp = ks.n;
    const GeneratorOutcome g = gen_prop44(ks);
    const bool near_miss =
        g.failed_hypotheses.size() == 1 && g.failed_hypotheses.front() == "gcd(q+1, p) = 1";
    if (!near_miss) return from_outcome(sp, g);
    const Rational candidate = Rational::make(sp.n, 2 * sp.p - 1);
    ClaimCheck c{sp, Verdict::excluded, "gcd(q+1,p)>1", {}};
    c.detail = "q-p+1 = " + std::to_string(sp.q - sp.p + 1) + " in Z-KS but gcd(q+1, p) = " +
               std::to_string(std::gcd(sp.q + 1, sp.p)) + "; " + candidate.str() +
               (in_fractional_part(ks, candidate) ? " is" : " is not") + " a base";
    return c;
}

ClaimCheck evaluate(Claim claim, const Semiprime& sp) {
    const KorseltSet ks = q_korselt_set(sp);
    switch (claim) {
        case Claim::main:
            return check_main_theorem(ks);
        case Claim::structure:
            return verify_structure(sp, ks.integer_part);
        case Claim::prop31: {
            if (!(2 * sp.p < sp.q && sp.q < 3 * sp.p))
                return {sp, Verdict::not_applicable, {}, "unmet: 2p < q < 3p"};
            return verify_prop31(sp);
        }
        case Claim::cor32: {
            if (sp.q < 2 * sp.p) return {sp, Verdict::not_applicable, {}, "unmet: q > 2p"};
            if (ks.contains_integer(sp.q - sp.p + 1))
                return {sp, Verdict::not_applicable, {}, "unmet: q-p+1 not in Z-KS"};
            return verify_cor32(sp);
        }
        case Claim::prop41:
            return check_prop41_all(ks);
        case Claim::prop42:
            return from_outcome(sp, gen_prop42(ks));
        case Claim::prop43:
            return from_outcome(sp, gen_prop43(ks));
        case Claim::prop44:
            return check_prop44_scan(ks);
        case Claim::parity:
            return check_parity(ks);
    }
    throw Error("unknown claim");
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::held: return "held";
        case Verdict::violated: return "violated";
        case Verdict::not_applicable: return "not_applicable";
        case Verdict::uncovered: return "uncovered";
        case Verdict::excluded: return "excluded";
    }
    return "?";
}

const std::vector<Claim>& all_claims() {
    static const std::vector<Claim> claims = {Claim::main,   Claim::structure, Claim::prop31,
                                              Claim::cor32,  Claim::prop41,    Claim::prop42,
                                              Claim::prop43, Claim::prop44,    Claim::parity};
    return claims;
}

std::string_view claim_name(Claim c) {
    switch (c) {
        case Claim::main: return "main";
        case Claim::structure: return "structure";
        case Claim::prop31: return "prop31";
        case Claim::cor32: return "cor32";
        case Claim::prop41: return "prop41";
        case Claim::prop42: return "prop42";
        case Claim::prop43: return "prop43";
        case Claim::prop44: return "prop44";
        case Claim::parity: return "parity";
    }
    return "?";
}

Claim parse_claim(std::string_view name) {
    for (Claim c : all_claims())
        if (claim_name(c) == name) return c;
    throw Error("unknown claim '" + std::string(name) + "'");
}

std::size_t ScanReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [v](const ClaimCheck& c) { return c.verdict == v; }));
}

GeneratorOutcome gen_prop41(const KorseltSet& ks, std::int64_t beta) {
    const Semiprime& sp = ks.n;
    GeneratorOutcome out;
    out.source = beta;
    const std::int64_t shifted = sp.p + sp.q - beta;
    if (sp.i != 1) out.failed_hypotheses.push_back("q = p + s (p < q < 2p)");
    if (beta == sp.universal_base()) out.failed_hypotheses.push_back("beta != p+q-1");
    if (std::gcd(sp.p, beta) != 1) out.failed_hypotheses.push_back("gcd(p, beta) = 1");
    if (std::gcd(sp.n, shifted) != 1) out.failed_hypotheses.push_back("gcd(pq, p+q-beta) = 1");
    if (!out.failed_hypotheses.empty()) {
        if (!ks.contains_integer(beta)) out.failed_hypotheses.push_back("beta in Z-KS(N)");
        return out;
    }

    // Side conditions hold, so p+q-beta != 0 and the image is well defined.
    const Rational image = Rational::make(sp.n, shifted);
    const bool source_in = ks.contains_integer(beta);
    const bool image_in = in_fractional_part(ks, image);
    out.equivalence = source_in == image_in;
    if (!source_in) {
        out.failed_hypotheses.push_back("beta in Z-KS(N)");
        out.detail = "beta=" + std::to_string(beta) + " not in Z-KS; " + image.str() +
                     (image_in ? " in (Q\\Z)-KS (converse fails)" : " not in (Q\\Z)-KS");
        return out;
    }
    out.hypotheses_met = true;
    finish(out, ks, image);
    if (!*out.equivalence) out.detail += " (forward direction fails)";
    return out;
}

GeneratorOutcome gen_prop41(const Semiprime& sp, std::int64_t beta) {
    return gen_prop41(q_korselt_set(sp), beta);
}

GeneratorOutcome gen_prop42(const KorseltSet& ks) {
    const Semiprime& sp = ks.n;
    GeneratorOutcome out;
    out.source = checked_mul64(sp.i, sp.p);
    if (!ks.contains_integer(out.source)) {
        out.failed_hypotheses.push_back("ip in Z-KS(N)");
        return out;
    }
    out.hypotheses_met = true;
    if ((sp.p - 1) % sp.s != 0) {
        out.detail = "ip in Z-KS but s = " + std::to_string(sp.s) + " does not divide p-1";
        return out;
    }
    const std::int64_t k1 = (sp.p - 1) / sp.s;
    out.k1 = k1;
    finish(out, ks, Rational::make(checked_mul(k1 + 1, sp.q), checked_add(checked_mul(sp.i, k1), 1)));
    return out;
}

GeneratorOutcome gen_prop42(const Semiprime& sp) { return gen_prop42(q_korselt_set(sp)); }

GeneratorOutcome gen_prop43(const KorseltSet& ks) {
    const Semiprime& sp = ks.n;
    GeneratorOutcome out;
    out.source = checked_mul64(sp.i + 1, sp.p);
    if (!ks.contains_integer(out.source)) out.failed_hypotheses.push_back("(i+1)p in Z-KS(N)");
    if (sp.s <= 1) out.failed_hypotheses.push_back("s > 1");
    if (!out.failed_hypotheses.empty()) return out;
    out.hypotheses_met = true;
    if ((sp.p - 1) % (sp.p - sp.s) != 0) {
        out.detail = "(i+1)p in Z-KS but p-s = " + std::to_string(sp.p - sp.s) + " does not divide p-1";
        return out;
    }
    const std::int64_t k1 = (sp.p - 1) / (sp.p - sp.s);
    out.k1 = k1;
    finish(out, ks,
           Rational::make(checked_mul(k1 - 1, sp.q), checked_sub(checked_mul(sp.i + 1, k1), 1)));
    return out;
}

GeneratorOutcome gen_prop43(const Semiprime& sp) { return gen_prop43(q_korselt_set(sp)); }

GeneratorOutcome gen_prop44(const KorseltSet& ks) {
    const Semiprime& sp = ks.n;
    GeneratorOutcome out;
    out.source = sp.q - sp.p + 1;
    if (!(2 * sp.p < sp.q && sp.q < 4 * sp.p)) out.failed_hypotheses.push_back("2p < q < 4p");
    if (std::gcd(sp.q + 1, sp.p) != 1) out.failed_hypotheses.push_back("gcd(q+1, p) = 1");
    if (!ks.contains_integer(out.source)) out.failed_hypotheses.push_back("q-p+1 in Z-KS(N)");
    if (!out.failed_hypotheses.empty()) return out;
    out.hypotheses_met = true;
    finish(out, ks, Rational::make(sp.n, 2 * sp.p - 1));
    return out;
}

GeneratorOutcome gen_prop44(const Semiprime& sp) { return gen_prop44(q_korselt_set(sp)); }

ClaimCheck verify_prop31(const Semiprime& sp) {
    const std::int64_t p = sp.p;
    const std::int64_t q = sp.q;
    if (!(2 * p < q && q < 3 * p))
        throw RangeError("prop31 needs 2p < q < 3p, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
    const auto z = z_korselt_set(sp);
    // q is odd here, so 2p+q-1 is even.
    const std::int64_t half = (2 * p + q - 1) / 2;
    const std::int64_t shifted = q - p + 1;
    const std::int64_t gamma = 3 * q - 5 * p + 3;
    const bool half_in = contains(z, half);
    const bool shifted_in = contains(z, shifted);
    const bool gamma_in = contains(z, gamma);
    const bool reduction = (q - 1) % (sp.s + 1) == 0;

    std::vector<std::string> failures;
    if (half_in != shifted_in) failures.push_back("(2p+q-1)/2 <=> q-p+1 fails");
    if (gamma_in && !shifted_in) failures.push_back("3q-5p+3 => q-p+1 fails");
    if (half_in != reduction) failures.push_back("(2p+q-1)/2 <=> s+1 | q-1 fails");

    ClaimCheck c{sp, failures.empty() ? Verdict::held : Verdict::violated, "2p<q<3p", {}};
    std::ostringstream d;
    d << half << (half_in ? " in" : " not in") << ", " << shifted << (shifted_in ? " in" : " not in") << ", "
      << gamma << (gamma_in ? " in" : " not in") << " Z-KS; s+1 " << (reduction ? "|" : "does not divide")
      << " q-1";
    c.detail = failures.empty() ? d.str() : join(failures, "; ") + " (" + d.str() + ")";
    return c;
}

ClaimCheck verify_cor32(const Semiprime& sp) {
    if (sp.q < 2 * sp.p) throw HypothesisNotMet("cor32 needs q > 2p");
    const auto z = z_korselt_set(sp);
    if (contains(z, sp.q - sp.p + 1))
        throw HypothesisNotMet("cor32 needs q-p+1 = " + std::to_string(sp.q - sp.p + 1) + " not in Z-KS(N)");
    const std::set<std::int64_t> allowed = {sp.i * sp.p, (sp.i + 1) * sp.p, sp.universal_base()};
    std::vector<std::int64_t> outside;
    for (std::int64_t b : z)
        if (!allowed.count(b)) outside.push_back(b);
    ClaimCheck c{sp, outside.empty() ? Verdict::held : Verdict::violated, "q>2p", {}};
    c.detail = "Z-KS = " + braces(z) + (outside.empty() ? " within " : " has " + braces(outside) + " outside ") +
               braces(allowed);
    return c;
}

ClaimCheck verify_structure(const Semiprime& sp) { return verify_structure(sp, z_korselt_set(sp)); }

ClaimCheck verify_structure(const Semiprime& sp, const std::vector<std::int64_t>& z) {
    const std::int64_t p = sp.p;
    const std::int64_t q = sp.q;
    const std::int64_t i = sp.i;
    const i128 p2 = static_cast<i128>(p) * p;
    const std::int64_t universal = sp.universal_base();

    ClaimCheck c{sp, Verdict::held, {}, {}};
    std::set<std::int64_t> allowed;
    bool equality = false;
    bool interval_case = false;

    if (q > 2 * p2) {
        c.label = "1";
        allowed = {universal};
        equality = true;
    } else if (p >= 5 && p2 - p < q && q < 2 * p2) {
        c.label = "2";
        allowed = {i * p, universal};
    } else if (4 * p < q && q < p2 - p) {
        c.label = "3";
        allowed = {i * p, (i + 1) * p, universal};
    } else if (3 * p < q && q < 4 * p) {
        if (q == 4 * p - 3) {
            equality = true;
            if (p % 3 == 1) {
                c.label = "4a(i)";
                allowed = {4 * p, q - p + 1, universal};
            } else {
                c.label = "4a(ii)";
                allowed = {q - p + 1, universal};
            }
        } else {
            c.label = "4b";
            allowed = {3 * p, 4 * p, universal};
        }
    } else if (2 * p < q && q < 3 * p) {
        c.label = "5";
        allowed = {2 * p, 3 * p, 3 * q - 5 * p + 3, (2 * p + q - 1) / 2, q - p + 1, universal};
    } else if (p < q && q < 2 * p) {
        c.label = "6";
        interval_case = true;
    } else {
        c.verdict = Verdict::uncovered;
        c.label = "uncovered";
        c.detail = "on a case boundary; Z-KS = " + braces(z);
        return c;
    }

    std::vector<std::int64_t> outside;
    for (std::int64_t b : z) {
        const bool ok = interval_case ? (b == universal || (b >= 2 && b <= 2 * p && b != p)) : allowed.count(b) > 0;
        if (!ok) outside.push_back(b);
    }
    std::vector<std::int64_t> absent;
    if (equality)
        for (std::int64_t b : allowed)
            if (!contains(z, b)) absent.push_back(b);

    const std::string target = interval_case ? "{p+q-1} u [2, 2p] \\ {p}" : braces(allowed);
    if (outside.empty() && absent.empty()) {
        c.detail = "Z-KS = " + braces(z) + (equality ? " equals " : " within ") + target;
    } else {
        c.verdict = Verdict::violated;
        c.detail = "Z-KS = " + braces(z) + (equality ? " differs from " : " not within ") + target;
        if (!outside.empty()) c.detail += "; unexpected " + braces(outside);
        if (!absent.empty()) c.detail += "; missing " + braces(absent);
    }
    return c;
}

ClaimCheck check_main_theorem(const KorseltSet& ks) {
    ClaimCheck c{ks.n, Verdict::not_applicable, {}, {}};
    if (!ks.fractional_part.empty()) {
        c.detail = "(Q\\Z)-KW = " + std::to_string(ks.fractional_part.size());
        return c;
    }
    const bool ok = ks.integer_part == std::vector<std::int64_t>{ks.n.universal_base()};
    c.verdict = ok ? Verdict::held : Verdict::violated;
    c.detail = "(Q\\Z)-KS empty, Z-KS = " + braces(ks.integer_part);
    return c;
}

ClaimCheck check_parity(const KorseltSet& ks) {
    const std::size_t weight = korselt_weights(ks).q_weight;
    ClaimCheck c{ks.n, weight % 2 == 1 ? Verdict::held : Verdict::violated, weight % 2 ? "odd" : "even", {}};
    c.detail = "Q-KW = " + std::to_string(weight);
    return c;
}

bool verify_converse_failure() {
    const KorseltSet ks = q_korselt_set(Semiprime::from_primes(2, 3));
    return ks.integer_part == std::vector<std::int64_t>{4} && ks.fractional_part.size() == 8;
}

ScanReport scan_claim(Claim claim, std::int64_t p_max, std::int64_t q_max, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    ScanReport report;
    report.claim = std::string(claim_name(claim));
    report.p_max = p_max;
    report.q_max = q_max;
    const auto semiprimes = semiprimes_in_range(p_max, q_max);
    report.checked = semiprimes.size();
    report.entries = parallel_map(semiprimes, [claim](const Semiprime& sp) { return evaluate(claim, sp); }, jobs);
    for (const ClaimCheck& c : report.entries) {
        if (c.verdict == Verdict::violated) report.violations.push_back({c.sp.n, c.detail});
        if (c.verdict == Verdict::excluded) report.excluded.push_back({c.sp.n, c.detail});
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

ScanReport verify_main_theorem(std::int64_t p_bound, std::int64_t q_bound, unsigned jobs) {
    return scan_claim(Claim::main, p_bound, q_bound, jobs);
}

ScanReport conjecture_parity_scan(std::int64_t p_bound, std::int64_t q_bound, unsigned jobs) {
    return scan_claim(Claim::parity, p_bound, q_bound, jobs);
}

}  // namespace korselt
