#pragma once

// Byte-deterministic text output: every float renders through the same
// "%.9g" conversion (9 significant digits, lowercase scientific), complex
// values as (re, im) cell pairs, and a minimal JSON/CSV emitter on top.

#include <complex>
#include <cstdio>
#include <string>
#include <vector>

namespace ptvar::fmt {

inline std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

inline std::string num(int v) { return std::to_string(v); }

inline std::pair<std::string, std::string> complex_cells(std::complex<double> z) {
    return {num(z.real()), num(z.imag())};
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

// One CSV row; cells containing separators or quotes are quoted.
inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string& c = cells[i];
        const bool quote = c.find_first_of(",\"\n") != std::string::npos;
        if (i) out += ',';
        if (quote) {
            out += '"';
            for (char ch : c) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
        } else {
            out += c;
        }
    }
    out += '\n';
    return out;
}

}  // namespace ptvar::fmt
