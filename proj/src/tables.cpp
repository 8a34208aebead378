#include "korselt/tables.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "korselt/expected_tables.hpp"
#include "korselt/scan.hpp"

namespace korselt {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::int64_t to_int(std::string_view field) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("bad integer field '" + std::string(field) + "' in embedded table");
    return v;
}

std::vector<std::int64_t> to_int_set(std::string_view field) {
    std::vector<std::int64_t> out;
    for (const auto& part : split(field, ';')) out.push_back(to_int(part));
    std::sort(out.begin(), out.end());
    return out;
}

// Data lines of an embedded CSV, header skipped.
std::vector<std::vector<std::string>> csv_records(std::string_view csv, std::size_t columns) {
    std::vector<std::vector<std::string>> out;
    bool header = true;
    for (auto line : split(csv, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != columns) throw ParseError("embedded table row has wrong arity: " + line);
        out.push_back(std::move(fields));
    }
    return out;
}

std::string set_str(const std::vector<std::int64_t>& v) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << v[k];
    out << '}';
    return out.str();
}

// Equal, strict superset (extra elements), or different.
RowStatus compare_sets(const std::vector<std::int64_t>& computed, const std::vector<std::int64_t>& expected) {
    if (computed == expected) return RowStatus::match;
    if (std::includes(computed.begin(), computed.end(), expected.begin(), expected.end())) return RowStatus::extra;
    return RowStatus::differs;
}

template <typename Row, typename Describe, typename Compare>
TableDiff diff_rows(const std::vector<Row>& computed, const std::vector<Row>& expected, Describe describe,
                    Compare compare) {
    std::map<std::int64_t, const Row*> want;
    for (const Row& r : expected) want[r.n] = &r;
    std::map<std::int64_t, const Row*> got;
    for (const Row& r : computed) got[r.n] = &r;

    TableDiff diff;
    for (const auto& [n, row] : got) {
        const auto it = want.find(n);
        if (it == want.end()) {
            diff.lines.push_back({n, RowStatus::unexpected, "not in reference: " + describe(*row)});
            continue;
        }
        const RowStatus s = compare(*row, *it->second);
        std::string detail = describe(*row);
        if (s != RowStatus::match) detail = "computed " + detail + ", reference " + describe(*it->second);
        diff.lines.push_back({n, s, detail});
    }
    for (const auto& [n, row] : want)
        if (!got.count(n)) diff.lines.push_back({n, RowStatus::missing, "reference row not produced: " + describe(*row)});
    std::stable_sort(diff.lines.begin(), diff.lines.end(),
                     [](const TableDiffLine& a, const TableDiffLine& b) { return a.n < b.n; });
    return diff;
}

}  // namespace

std::string_view row_status_name(RowStatus s) {
    switch (s) {
        case RowStatus::match: return "match";
        case RowStatus::extra: return "extra";
        case RowStatus::differs: return "differs";
        case RowStatus::missing: return "missing";
        case RowStatus::unexpected: return "unexpected";
    }
    return "?";
}

bool TableDiff::exact() const { return mismatches() == 0; }

std::size_t TableDiff::mismatches() const {
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(),
                                                  [](const TableDiffLine& l) { return l.status != RowStatus::match; }));
}

std::vector<Table1Row> table1_reproduce(unsigned jobs) {
    const auto semiprimes = semiprimes_in_range(kTable1QMax, kTable1QMax);
    const auto sets = parallel_map(semiprimes, [](const Semiprime& sp) { return q_korselt_set(sp); }, jobs);
    std::vector<Table1Row> rows;
    for (const KorseltSet& ks : sets)
        if (ks.fractional_part.empty()) rows.push_back({ks.n.n, ks.n.p, ks.n.q, ks.integer_part});
    return rows;
}

std::vector<Table2Row> table2_reproduce(unsigned jobs) {
    const auto semiprimes = semiprimes_in_range(kTable2QBound - 1, kTable2QBound - 1);
    const auto weights = parallel_map(
        semiprimes,
        [](const Semiprime& sp) {
            const KorseltSet ks = q_korselt_set(sp);
            return std::pair{ks.integer_part, ks.fractional_part.size()};
        },
        jobs);

    std::map<std::int64_t, Table2Row> best;
    for (std::size_t k = 0; k < semiprimes.size(); ++k) {
        const Semiprime& sp = semiprimes[k];
        const auto& [z, qz] = weights[k];
        const auto i = static_cast<std::int64_t>(z.size());
        if (i < 1 || i > kTable2MaxWeight) continue;
        const auto it = best.find(i);
        if (it == best.end() || std::pair{qz, sp.n} < std::pair{it->second.qz_weight, it->second.n})
            best[i] = Table2Row{i, sp.n, sp.p, sp.q, z, qz};
    }
    std::vector<Table2Row> rows;
    for (auto& [i, row] : best) rows.push_back(std::move(row));
    return rows;
}

std::vector<Table1Row> expected_table1() {
    std::vector<Table1Row> rows;
    for (const auto& f : csv_records(expected::kTable1Csv, 3)) {
        const std::int64_t p = to_int(f[0]);
        const std::int64_t q = to_int(f[1]);
        rows.push_back({p * q, p, q, to_int_set(f[2])});
    }
    std::sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) { return a.n < b.n; });
    return rows;
}

std::vector<Table2Row> expected_table2() {
    std::vector<Table2Row> rows;
    for (const auto& f : csv_records(expected::kTable2Csv, 5)) {
        const std::int64_t p = to_int(f[1]);
        const std::int64_t q = to_int(f[2]);
        rows.push_back({to_int(f[0]), p * q, p, q, to_int_set(f[3]), static_cast<std::size_t>(to_int(f[4]))});
    }
    return rows;
}

TableDiff diff_table1(const std::vector<Table1Row>& computed, const std::vector<Table1Row>& expected) {
    return diff_rows(
        computed, expected,
        [](const Table1Row& r) { return std::to_string(r.p) + "*" + std::to_string(r.q) + " " + set_str(r.z_set); },
        [](const Table1Row& a, const Table1Row& b) { return compare_sets(a.z_set, b.z_set); });
}

TableDiff diff_table2(const std::vector<Table2Row>& computed, const std::vector<Table2Row>& expected) {
    return diff_rows(
        computed, expected,
        [](const Table2Row& r) {
            return "i=" + std::to_string(r.i) + " " + std::to_string(r.p) + "*" + std::to_string(r.q) + " " +
                   set_str(r.z_set) + " qz_weight=" + std::to_string(r.qz_weight);
        },
        [](const Table2Row& a, const Table2Row& b) {
            if (a.i != b.i || a.qz_weight != b.qz_weight) return RowStatus::differs;
            return compare_sets(a.z_set, b.z_set);
        });
}

}  // namespace korselt
