#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "korselt/numtheory.hpp"

namespace korselt {

/// A report cell. Rationals and sets of rationals travel as strings, never floats.
using Cell = std::variant<std::int64_t, std::string, bool, std::vector<std::string>>;

struct Field {
    std::string key;
    Cell value;
};

using Record = std::vector<Field>;

/// Machine-readable output of every CLI command.
struct ReportDocument {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Record> rows;
    std::vector<Field> summary;
    std::string version;
};

enum class Format { table, csv, json };

/// Throws Error on anything but "table", "csv" or "json".
Format parse_format(std::string_view name);

/// JSON object {command, parameters, rows, summary, version}; flat row objects.
std::string render_json(const ReportDocument& doc);

/// Header row plus one line per row. Strings are quoted, sets joined with ';'.
std::string render_csv(const ReportDocument& doc);

/// Aligned plain-text table followed by the summary.
std::string render_table(const ReportDocument& doc);

std::string render(const ReportDocument& doc, Format format);

/// Value of a 128-bit integer as a cell: a number when it fits in 64 bits.
Cell integer_cell(i128 v);

std::vector<std::string> to_strings(const std::vector<Rational>& values);
std::vector<std::string> to_strings(const std::vector<std::int64_t>& values);

}  // namespace korselt
