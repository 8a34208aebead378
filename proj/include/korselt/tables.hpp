#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "korselt/korselt_set.hpp"

namespace korselt {

/// A semiprime with empty (Q\Z)-KS(N), listed with its Z-KS(N).
struct Table1Row {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> z_set;

    friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// The chosen N_i for Z-KW(N_i) = i.
struct Table2Row {
    std::int64_t i = 0;
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> z_set;
    std::size_t qz_weight = 0;

    friend bool operator==(const Table2Row&, const Table2Row&) = default;
};

inline constexpr std::int64_t kTable1QMax = 53;
inline constexpr std::int64_t kTable2QBound = 1000;  // exclusive
inline constexpr std::int64_t kTable2MaxWeight = 7;

/// Every p < q <= 53 with empty (Q\Z)-KS(N), ascending by N.
std::vector<Table1Row> table1_reproduce(unsigned jobs = 0);

/// For i = 1..7 over p < q < 1000: among N with Z-KW(N) = i, the one with the
/// smallest (Q\Z)-KW(N), ties broken by the smaller N.
std::vector<Table2Row> table2_reproduce(unsigned jobs = 0);

/// Rows compiled in from data/table1.csv and data/table2.csv.
std::vector<Table1Row> expected_table1();
std::vector<Table2Row> expected_table2();

enum class RowStatus { match, extra, differs, missing, unexpected };

std::string_view row_status_name(RowStatus s);

/// Row-by-row comparison keyed on N.
struct TableDiffLine {
    std::int64_t n = 0;
    RowStatus status = RowStatus::match;
    std::string detail;
};

struct TableDiff {
    std::vector<TableDiffLine> lines;
    bool exact() const;
    std::size_t mismatches() const;
};

/// Computed rows whose Z-KS strictly contains the expected one are marked `extra`.
TableDiff diff_table1(const std::vector<Table1Row>& computed, const std::vector<Table1Row>& expected);
TableDiff diff_table2(const std::vector<Table2Row>& computed, const std::vector<Table2Row>& expected);

}  // namespace korselt
