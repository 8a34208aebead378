#include "korselt/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "korselt/korselt_set.hpp"
#include "korselt/tables.hpp"
#include "korselt/theorems.hpp"
#include "korselt/version.hpp"

namespace korselt {

namespace {

ReportDocument new_report(std::string command) {
    ReportDocument doc;
    doc.command = std::move(command);
    doc.version = std::string("korselt ") + kVersion;
    return doc;
}

CommandResult usage_error(ReportDocument doc, const std::string& message) {
    CommandResult r{std::move(doc), kExitUsage, {}};
    r.report.summary.push_back({"error", message});
    r.messages.push_back("error: " + message);
    return r;
}

}  // namespace

CommandResult cmd_base_check(std::int64_t n, std::string_view alpha_text) {
    ReportDocument doc = new_report("base-check");
    doc.parameters = {{"n", std::to_string(n)}, {"alpha", std::string(alpha_text)}};
    try {
        const Rational alpha = Rational::parse(alpha_text);
        const BaseCheck check = korselt_base_breakdown(n, alpha);
        for (const PrimeCondition& c : check.conditions) {
            doc.rows.push_back({{"prime", c.prime},
                                {"divisor", integer_cell(c.divisor)},
                                {"dividend", integer_cell(c.dividend)},
                                {"divides", c.divides}});
        }
        doc.summary.push_back({"alpha", alpha.str()});
        if (check.excluded_value) doc.summary.push_back({"excluded_value", true});
        doc.summary.push_back({"verdict", check.is_base});
        return {std::move(doc), check.is_base ? kExitOk : kExitFalse, {}};
    } catch (const Error& e) {
        return usage_error(std::move(doc), e.what());
    }
}

CommandResult cmd_set(std::int64_t n, std::string_view domain) {
    ReportDocument doc = new_report("set");
    doc.parameters = {{"n", std::to_string(n)}, {"domain", std::string(domain)}};
    if (domain != "z" && domain != "qz" && domain != "q")
        return usage_error(std::move(doc), "unknown domain '" + std::string(domain) + "' (expected z, qz or q)");
    try {
        const KorseltSet ks = q_korselt_set(Semiprime::from_n(n));
        std::vector<Rational> elements;
        if (domain == "z") {
            for (std::int64_t b : ks.integer_part) elements.emplace_back(b);
        } else if (domain == "qz") {
            elements = ks.fractional_part;
        } else {
            elements = ks.all();
        }
        for (const Rational& a : elements)
            doc.rows.push_back({{"n", n}, {"base", a.str()}, {"kind", a.is_integer() ? "integer" : "fractional"}});

        const KorseltWeights w = korselt_weights(ks);
        const auto negatives = std::count_if(elements.begin(), elements.end(), [](const Rational& a) { return a.num() < 0; });
        doc.summary = {{"p", ks.n.p},
                       {"q", ks.n.q},
                       {"weight", static_cast<std::int64_t>(elements.size())},
                       {"z_weight", static_cast<std::int64_t>(w.z_weight)},
                       {"qz_weight", static_cast<std::int64_t>(w.qz_weight)},
                       {"q_weight", static_cast<std::int64_t>(w.q_weight)},
                       {"negative_bases", static_cast<std::int64_t>(negatives)}};
        CommandResult r{std::move(doc), kExitOk, {}};
        if (negatives > 0) r.messages.push_back("note: set contains negative bases");
        return r;
    } catch (const Error& e) {
        return usage_error(std::move(doc), e.what());
    }
}

CommandResult cmd_verify(std::string_view claim_text, std::int64_t p_max, std::int64_t q_max, unsigned jobs) {
    ReportDocument doc = new_report("verify");
    doc.parameters = {{"claim", std::string(claim_text)}, {"p_max", std::to_string(p_max)}, {"q_max", std::to_string(q_max)}};
    Claim claim;
    try {
        claim = parse_claim(claim_text);
    } catch (const Error& e) {
        return usage_error(std::move(doc), e.what());
    }
    if (p_max < 3 || q_max < 3) return usage_error(std::move(doc), "bounds must be >= 3");

    const ScanReport scan = scan_claim(claim, p_max, q_max, jobs);
    for (const ClaimCheck& c : scan.entries) {
        doc.rows.push_back({{"n", c.sp.n},
                            {"p", c.sp.p},
                            {"q", c.sp.q},
                            {"verdict", std::string(verdict_name(c.verdict))},
                            {"case", c.label},
                            {"detail", c.detail}});
    }
    doc.summary = {{"checked", static_cast<std::int64_t>(scan.checked)}};
    for (Verdict v : {Verdict::held, Verdict::violated, Verdict::not_applicable, Verdict::uncovered, Verdict::excluded})
        doc.summary.push_back({std::string(verdict_name(v)), static_cast<std::int64_t>(scan.count(v))});
    std::vector<std::string> violating;
    for (const ScanViolation& v : scan.violations) violating.push_back(std::to_string(v.n));
    doc.summary.push_back({"violations", violating});
    doc.summary.push_back({"holds", scan.holds()});

    CommandResult r{std::move(doc), scan.holds() ? kExitOk : kExitViolations, {}};
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(3) << "scanned " << scan.checked << " semiprimes in "
           << scan.elapsed.count() << " s";
    r.messages.push_back(timing.str());
    for (const ScanViolation& v : scan.violations)
        r.messages.push_back("violation N=" + std::to_string(v.n) + ": " + v.detail);
    for (const ScanViolation& v : scan.excluded)
        r.messages.push_back("excluded N=" + std::to_string(v.n) + ": " + v.detail);
    return r;
}

CommandResult cmd_tables(int which, unsigned jobs) {
    ReportDocument doc = new_report("tables");
    doc.parameters = {{"table", std::to_string(which)}};
    if (which != 1 && which != 2) return usage_error(std::move(doc), "table must be 1 or 2");

    TableDiff diff;
    if (which == 1) {
        const auto rows = table1_reproduce(jobs);
        diff = diff_table1(rows, expected_table1());
        for (const Table1Row& r : rows)
            doc.rows.push_back({{"n", r.n}, {"p", r.p}, {"q", r.q}, {"z_set", to_strings(r.z_set)}});
    } else {
        const auto rows = table2_reproduce(jobs);
        diff = diff_table2(rows, expected_table2());
        auto sorted = rows;
        std::sort(sorted.begin(), sorted.end(), [](const Table2Row& a, const Table2Row& b) { return a.n < b.n; });
        for (const Table2Row& r : sorted)
            doc.rows.push_back({{"n", r.n},
                                {"i", r.i},
                                {"p", r.p},
                                {"q", r.q},
                                {"z_set", to_strings(r.z_set)},
                                {"qz_weight", static_cast<std::int64_t>(r.qz_weight)}});
    }
    // Attach the per-row comparison status, keyed by N.
    for (Record& row : doc.rows) {
        const std::int64_t n = std::get<std::int64_t>(row.front().value);
        const auto it = std::find_if(diff.lines.begin(), diff.lines.end(), [n](const TableDiffLine& l) { return l.n == n; });
        row.push_back({"status", std::string(row_status_name(it == diff.lines.end() ? RowStatus::unexpected : it->status))});
    }
    doc.summary = {{"rows", static_cast<std::int64_t>(doc.rows.size())},
                   {"mismatches", static_cast<std::int64_t>(diff.mismatches())},
                   {"exact_match", diff.exact()}};

    CommandResult r{std::move(doc), diff.exact() ? kExitOk : kExitViolations, {}};
    for (const TableDiffLine& l : diff.lines)
        if (l.status != RowStatus::match)
            r.messages.push_back("diff N=" + std::to_string(l.n) + " [" + std::string(row_status_name(l.status)) + "] " + l.detail);
    r.messages.push_back("table " + std::to_string(which) + ": " + std::to_string(r.report.rows.size()) + " rows, " +
                         (diff.exact() ? "exact match" : std::to_string(diff.mismatches()) + " mismatch(es)"));
    return r;
}

}  // namespace korselt
