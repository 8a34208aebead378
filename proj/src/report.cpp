#include "korselt/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace korselt {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cell_json(const Cell& c) {
    return std::visit([](const auto& v) -> ordered_json { return v; }, c);
}

std::string csv_quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
    return out;
}

std::string cell_csv(const Cell& c) {
    struct Visitor {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return csv_quote(v); }
        std::string operator()(const std::vector<std::string>& v) const { return csv_quote(join(v, ";")); }
    };
    return std::visit(Visitor{}, c);
}

std::string cell_text(const Cell& c) {
    struct Visitor {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(const std::vector<std::string>& v) const { return "{" + join(v, ", ") + "}"; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "table") return Format::table;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw Error("unknown format '" + std::string(name) + "' (expected table, csv or json)");
}

std::string render_json(const ReportDocument& doc) {
    ordered_json j;
    j["command"] = doc.command;
    j["parameters"] = ordered_json::object();
    for (const auto& [k, v] : doc.parameters) j["parameters"][k] = v;
    j["rows"] = ordered_json::array();
    for (const Record& row : doc.rows) {
        ordered_json r = ordered_json::object();
        for (const Field& f : row) r[f.key] = cell_json(f.value);
        j["rows"].push_back(std::move(r));
    }
    j["summary"] = ordered_json::object();
    for (const Field& f : doc.summary) j["summary"][f.key] = cell_json(f.value);
    j["version"] = doc.version;
    return j.dump(2) + "\n";
}

std::string render_csv(const ReportDocument& doc) {
    std::string out;
    if (doc.rows.empty()) return out;
    std::vector<std::string> header;
    for (const Field& f : doc.rows.front()) header.push_back(f.key);
    out += join(header, ",") + "\n";
    for (const Record& row : doc.rows) {
        std::vector<std::string> cells;
        for (const Field& f : row) cells.push_back(cell_csv(f.value));
        out += join(cells, ",") + "\n";
    }
    return out;
}

std::string render_table(const ReportDocument& doc) {
    std::ostringstream out;
    out << doc.command;
    for (const auto& [k, v] : doc.parameters) out << "  " << k << "=" << v;
    out << "\n";
    if (!doc.rows.empty()) {
        std::vector<std::string> header;
        for (const Field& f : doc.rows.front()) header.push_back(f.key);
        std::vector<std::vector<std::string>> cells;
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
        for (const Record& row : doc.rows) {
            std::vector<std::string> line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                line.push_back(cell_text(row[c].value));
                if (c < width.size()) width[c] = std::max(width[c], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        auto emit = [&](const std::vector<std::string>& line) {
            std::string text;
            for (std::size_t c = 0; c < line.size(); ++c) {
                std::string cell = line[c];
                if (c + 1 < line.size() && c < width.size()) cell.resize(width[c], ' ');
                text += (c ? "  " : "") + cell;
            }
            out << text << "\n";
        };
        emit(header);
        for (const auto& line : cells) emit(line);
    }
    for (const Field& f : doc.summary) out << f.key << ": " << cell_text(f.value) << "\n";
    return out.str();
}

std::string render(const ReportDocument& doc, Format format) {
    switch (format) {
        case Format::table: return render_table(doc);
        case Format::csv: return render_csv(doc);
        case Format::json: return render_json(doc);
    }
    return {};
}

Cell integer_cell(i128 v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rational& r : values) out.push_back(r.str());
    return out;
}

std::vector<std::string> to_strings(const std::vector<std::int64_t>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (std::int64_t v : values) out.push_back(std::to_string(v));
    return out;
}

}  // namespace korselt
