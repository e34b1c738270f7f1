#include "knotgas/csv.hpp"

#include <cmath>
#include <cstdio>

#include "knotgas/errors.hpp"

namespace knotgas {

std::string format_double(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary), columns_(header.size()) {
    if (!out_)
        throw error("cannot open output file: " + path);
    write_row(header);
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_)
        throw error("csv row width mismatch in " + path_);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
    if (!out_)
        throw error("write failed: " + path_);
}

} // namespace knotgas
