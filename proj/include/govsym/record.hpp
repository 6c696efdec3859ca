#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "govsym/common.hpp"

namespace govsym {

/// One line of experiment output: checkpoint, counts, complex value, reference
/// envelope and the ratio |value|/bound (0 when bound is 0).
struct RecordRow {
    i64 x{0};
    std::string label;
    i64 count{0};
    double value_re{0.0};
    double value_im{0.0};
    double bound{0.0};
    double ratio{0.0};

    double abs_value() const { return std::hypot(value_re, value_im); }
};

inline RecordRow make_row(i64 x, std::string label, i64 count, double re, double im,
                          double bound) {
    RecordRow r{x, std::move(label), count, re, im, bound, 0.0};
    if (bound > 0.0) r.ratio = r.abs_value() / bound;
    return r;
}

namespace detail {

inline std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace detail

inline const char* csv_header() { return "x,label,count,value_re,value_im,bound,ratio"; }

inline std::string to_csv(const RecordRow& r) {
    std::ostringstream os;
    os << r.x << ',' << r.label << ',' << r.count << ',' << detail::fmt6(r.value_re) << ','
       << detail::fmt6(r.value_im) << ',' << detail::fmt6(r.bound) << ','
       << detail::fmt6(r.ratio);
    return os.str();
}

inline std::string to_json(const RecordRow& r) {
    std::ostringstream os;
    os << "{\"x\":" << r.x << ",\"label\":\"" << r.label << "\",\"count\":" << r.count
       << ",\"value_re\":" << detail::fmt6(r.value_re)
       << ",\"value_im\":" << detail::fmt6(r.value_im) << ",\"bound\":" << detail::fmt6(r.bound)
       << ",\"ratio\":" << detail::fmt6(r.ratio) << "}";
    return os.str();
}

inline RecordRow parse_csv_row(const std::string& line) {
    std::istringstream is(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(is, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw std::invalid_argument("parse_csv_row: expected 7 fields");
    RecordRow r;
    r.x = std::stoll(fields[0]);
    r.label = fields[1];
    r.count = std::stoll(fields[2]);
    r.value_re = std::stod(fields[3]);
    r.value_im = std::stod(fields[4]);
    r.bound = std::stod(fields[5]);
    r.ratio = std::stod(fields[6]);
    return r;
}

inline void write_csv(const std::vector<RecordRow>& rows, std::ostream& os) {
    os << csv_header() << '\n';
    for (const auto& r : rows) os << to_csv(r) << '\n';
}

inline void write_json(const std::vector<RecordRow>& rows, std::ostream& os) {
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        os << "  " << to_json(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    os << "]\n";
}

}  // namespace govsym
