#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace odsup::csv {

struct Table {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

// Comma-separated numeric CSV: one observation per row, '.' decimal point,
// no header unless skip_header. Ragged rows or non-numeric fields raise
// InputError. Parsing uses std::from_chars, so it is locale-independent.
Table read_table(std::istream& in, bool skip_header = false);
Table read_table_file(const std::string& path, bool skip_header = false);

// Shortest round-trip decimal form of v (std::to_chars); reparsing yields the
// identical double, which is what makes simulate -> test lossless.
std::string format_double(double v);

void write_row(std::ostream& out, const double* values, std::size_t count);

}  // namespace odsup::csv
