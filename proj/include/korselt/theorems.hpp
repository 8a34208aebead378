#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "korselt/korselt_set.hpp"

namespace korselt {

/// Result of one generator map Z-KS(N) -> (Q\Z)-KS(N) applied to one source base.
struct GeneratorOutcome {
    std::int64_t source = 0;
    bool hypotheses_met = false;
    std::vector<std::string> failed_hypotheses;
    std::optional<Rational> generated;
    /// Whether `generated` lies in (Q\Z)-KS(N).
    std::optional<bool> member;
    std::optional<std::int64_t> k1;
    /// Two-sided maps only: the side conditions held and
    /// (source in Z-KS) <=> (image in (Q\Z)-KS) was evaluated.
    std::optional<bool> equivalence;
    std::string detail;
};

enum class Verdict {
    held,            // claim applied and was true
    violated,        // claim applied and was false
    not_applicable,  // hypotheses not met
    uncovered,       // case boundary outside every strict inequality
    excluded,        // near miss: all hypotheses but a standing assumption
};

std::string_view verdict_name(Verdict v);

/// One semiprime's row in a scan.
struct ClaimCheck {
    Semiprime sp;
    Verdict verdict = Verdict::not_applicable;
    std::string label;
    std::string detail;
};

struct ScanViolation {
    std::int64_t n = 0;
    std::string detail;

    friend bool operator==(const ScanViolation&, const ScanViolation&) = default;
};

enum class Claim { main, structure, prop31, cor32, prop41, prop42, prop43, prop44, parity };

std::string_view claim_name(Claim c);
/// Throws Error for unknown names.
Claim parse_claim(std::string_view name);
const std::vector<Claim>& all_claims();

struct ScanReport {
    std::string claim;
    std::int64_t p_max = 0;
    std::int64_t q_max = 0;
    std::size_t checked = 0;
    std::vector<ClaimCheck> entries;  // ascending by N
    std::vector<ScanViolation> violations;
    std::vector<ScanViolation> excluded;
    std::chrono::duration<double> elapsed{};

    std::size_t count(Verdict v) const;
    bool holds() const { return violations.empty(); }
};

// Generators. The overloads taking a KorseltSet reuse a set computed by the caller.

/// pq/(p+q-beta) for p < q < 2p. Two-sided: `equivalence` is set whenever the
/// side conditions hold, whether or not beta is itself a base.
GeneratorOutcome gen_prop41(const KorseltSet& ks, std::int64_t beta);
GeneratorOutcome gen_prop41(const Semiprime& sp, std::int64_t beta);

/// (k1+1)q/(i*k1+1) with k1 = (p-1)/s, from the base i*p.
GeneratorOutcome gen_prop42(const KorseltSet& ks);
GeneratorOutcome gen_prop42(const Semiprime& sp);

/// (k1-1)q/((i+1)k1-1) with k1 = (p-1)/(p-s), from the base (i+1)p when s > 1.
GeneratorOutcome gen_prop43(const KorseltSet& ks);
GeneratorOutcome gen_prop43(const Semiprime& sp);

/// pq/(2p-1) from the base q-p+1, for 2p < q < 4p and gcd(q+1, p) = 1.
GeneratorOutcome gen_prop44(const KorseltSet& ks);
GeneratorOutcome gen_prop44(const Semiprime& sp);

// Per-N verifiers.

/// Requires 2p < q < 3p, throws RangeError otherwise. Checks the biconditional
/// between (2p+q-1)/2 and q-p+1, the implication from 3q-5p+3, and the
/// reduction of the first membership to s+1 | q-1.
ClaimCheck verify_prop31(const Semiprime& sp);

/// Requires q > 2p and q-p+1 not in Z-KS(N); throws HypothesisNotMet otherwise.
ClaimCheck verify_cor32(const Semiprime& sp);

/// Dispatches on the six structure cases; set equality for q = 4p-3.
ClaimCheck verify_structure(const Semiprime& sp);
ClaimCheck verify_structure(const Semiprime& sp, const std::vector<std::int64_t>& z_set);

/// Empty (Q\Z)-KS(N) must force Z-KS(N) = {p+q-1}.
ClaimCheck check_main_theorem(const KorseltSet& ks);

/// Q-KW(N) odd.
ClaimCheck check_parity(const KorseltSet& ks);

/// N = 6: Z-KS = {4} = {p+q-1} while (Q\Z)-KS(6) has eight elements.
bool verify_converse_failure();

// Range scans over every semiprime with p <= p_max, q <= q_max.

ScanReport scan_claim(Claim claim, std::int64_t p_max, std::int64_t q_max, unsigned jobs = 0);
ScanReport verify_main_theorem(std::int64_t p_bound, std::int64_t q_bound, unsigned jobs = 0);
/// Informational: even weights are recorded as violations, nothing is assumed.
ScanReport conjecture_parity_scan(std::int64_t p_bound, std::int64_t q_bound, unsigned jobs = 0);

}  // namespace korselt
