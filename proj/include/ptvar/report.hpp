#pragma once

// Structured command output: a named-column results table plus comparison
// rows against the frozen reference datasets, renderable as plain text,
// CSV, or JSON, all byte-deterministic.

#include <cmath>
#include <string>
#include <vector>

#include "ptvar/format.hpp"

namespace ptvar {

struct ComparisonRow {
    std::string id;  // reference-dataset id, e.g. "ground-energy/N=3"
    double reference;
    double computed;
    double tolerance;  // absolute
    bool pass;

    static ComparisonRow make(std::string id, double reference, double computed,
                              double tolerance) {
        const bool ok = std::abs(computed - reference) <= tolerance;
        return {std::move(id), reference, computed, tolerance, ok};
    }

    double abs_dev() const { return std::abs(computed - reference); }
    double rel_dev() const {
        return reference == 0.0 ? std::abs(computed)
                                : std::abs(computed - reference) / std::abs(reference);
    }
};

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // cells pre-rendered
};

struct RunReport {
    std::string command;  // echo of the invocation
    double model_n = 0.0;
    ResultTable table;
    std::vector<ComparisonRow> comparisons;

    bool ok() const {
        for (const auto& c : comparisons)
            if (!c.pass) return false;
        return true;
    }
};

namespace fmt {

inline std::string to_csv(const RunReport& r) {
    std::string out;
    out += "# command," + r.command + "\n";
    out += "# N," + num(r.model_n) + "\n";
    out += csv_row(r.table.columns);
    for (const auto& row : r.table.rows) out += csv_row(row);
    if (!r.comparisons.empty()) {
        out += "\n";
        out += csv_row({"id", "reference", "computed", "abs_dev", "rel_dev",
                        "tolerance", "pass"});
        for (const auto& c : r.comparisons)
            out += csv_row({c.id, num(c.reference), num(c.computed), num(c.abs_dev()),
                            num(c.rel_dev()), num(c.tolerance), c.pass ? "1" : "0"});
    }
    return out;
}

inline std::string to_json(const RunReport& r) {
    std::string out = "{\n";
    out += "  \"command\": " + json_str(r.command) + ",\n";
    out += "  \"N\": " + num(r.model_n) + ",\n";
    out += "  \"columns\": [";
    for (std::size_t i = 0; i < r.table.columns.size(); ++i)
        out += (i ? ", " : "") + json_str(r.table.columns[i]);
    out += "],\n  \"rows\": [\n";
    for (std::size_t i = 0; i < r.table.rows.size(); ++i) {
        out += "    [";
        for (std::size_t k = 0; k < r.table.rows[i].size(); ++k)
            out += (k ? ", " : "") + json_str(r.table.rows[i][k]);
        out += i + 1 < r.table.rows.size() ? "],\n" : "]\n";
    }
    out += "  ],\n  \"comparisons\": [\n";
    for (std::size_t i = 0; i < r.comparisons.size(); ++i) {
        const auto& c = r.comparisons[i];
        out += "    {\"id\": " + json_str(c.id) + ", \"reference\": " + num(c.reference) +
               ", \"computed\": " + num(c.computed) + ", \"abs_dev\": " + num(c.abs_dev()) +
               ", \"rel_dev\": " + num(c.rel_dev()) + ", \"tolerance\": " + num(c.tolerance) +
               ", \"pass\": " + (c.pass ? "true" : "false") + "}";
        out += i + 1 < r.comparisons.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

inline std::string to_text(const RunReport& r) {
    std::string out;
    out += "command: " + r.command + "\n";
    auto pad = [](const std::string& s, std::size_t w) {
        return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    };
    std::vector<std::size_t> widths(r.table.columns.size());
    for (std::size_t i = 0; i < r.table.columns.size(); ++i)
        widths[i] = r.table.columns[i].size();
    for (const auto& row : r.table.rows)
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i)
            s += (i ? "  " : "") + pad(cells[i], i < widths.size() ? widths[i] : 0);
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + "\n";
    };
    out += line(r.table.columns);
    for (const auto& row : r.table.rows) out += line(row);
    if (!r.comparisons.empty()) {
        out += "\ncomparisons:\n";
        for (const auto& c : r.comparisons)
            out += "  [" + std::string(c.pass ? "pass" : "FAIL") + "] " + c.id +
                   ": reference " + num(c.reference) + ", computed " + num(c.computed) +
                   ", abs dev " + num(c.abs_dev()) + " (tol " + num(c.tolerance) + ")\n";
    }
    return out;
}

}  // namespace fmt
}  // namespace ptvar
