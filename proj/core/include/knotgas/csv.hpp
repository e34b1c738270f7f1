#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace knotgas {

/// Round-trip-exact formatting of a double (17 significant digits, '.'
/// decimal separator regardless of locale). NaN/inf print as nan/inf.
std::string format_double(double value);

/// Minimal CSV writer: one header row, ',' separator, '\n' line ends, no
/// timestamps or other run-dependent content, so identical inputs produce
/// byte-identical files.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void write_row(const std::vector<std::string>& fields);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
    std::size_t columns_;
};

} // namespace knotgas
