#include "vxk/tabulate.hpp"

#include <cstdio>
#include <stdexcept>

namespace vxk {

void TabulatedSweep::add_row(std::vector<double> row) {
    if (row.size() != column_names.size())
        throw std::invalid_argument(
            "TabulatedSweep: row length does not match column count");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // pin the decimal separator even if the host process changed LC_NUMERIC
    for (char* p = buf; *p; ++p)
        if (*p == ',') *p = '.';
    return buf;
}

void write_csv(std::ostream& os, const TabulatedSweep& sweep) {
    for (const auto& [key, value] : sweep.metadata)
        os << "# " << key << " = " << value << "\n";
    for (size_t c = 0; c < sweep.column_names.size(); ++c) {
        if (c) os << ',';
        os << sweep.column_names[c];
    }
    os << '\n';
    for (const auto& row : sweep.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << format_double(row[c]);
        }
        os << '\n';
    }
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace

void write_json(std::ostream& os, const TabulatedSweep& sweep) {
    os << "{\n  \"columns\": [";
    for (size_t c = 0; c < sweep.column_names.size(); ++c) {
        if (c) os << ", ";
        os << '"' << json_escape(sweep.column_names[c]) << '"';
    }
    os << "],\n";
    if (!sweep.metadata.empty()) {
        os << "  \"metadata\": {";
        for (size_t i = 0; i < sweep.metadata.size(); ++i) {
            if (i) os << ", ";
            os << '"' << json_escape(sweep.metadata[i].first) << "\": "
               << sweep.metadata[i].second;
        }
        os << "},\n";
    }
    os << "  \"rows\": [";
    for (size_t r = 0; r < sweep.rows.size(); ++r) {
        os << (r ? ",\n    [" : "\n    [");
        for (size_t c = 0; c < sweep.rows[r].size(); ++c) {
            if (c) os << ", ";
            os << format_double(sweep.rows[r][c]);
        }
        os << ']';
    }
    os << "\n  ]\n}\n";
}

}  // namespace vxk
