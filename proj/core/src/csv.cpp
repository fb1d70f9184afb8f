#include "odsup/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "odsup/errors.hpp"

namespace odsup::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_field(std::string_view field, std::size_t line_no) {
    field = trim(field);
    double value = 0.0;
    const auto* begin = field.data();
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw InputError("line " + std::to_string(line_no) + ": cannot parse field '" +
                         std::string(field) + "' as a number");
    }
    return value;
}

}  // namespace

Table read_table(std::istream& in, bool skip_header) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool first_data_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (skip_header && line_no == 1) continue;
        const std::string_view view = trim(line);
        if (view.empty()) continue;

        std::size_t cols = 0;
        std::size_t start = 0;
        const std::string row(view);
        while (true) {
            const std::size_t comma = row.find(',', start);
            const std::string_view field(row.data() + start,
                                         (comma == std::string::npos ? row.size() : comma) - start);
            table.values.push_back(parse_field(field, line_no));
            ++cols;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (first_data_row) {
            table.cols = cols;
            first_data_row = false;
        } else if (cols != table.cols) {
            throw InputError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(table.cols) + " fields, got " + std::to_string(cols));
        }
        ++table.rows;
    }
    if (table.rows == 0) throw InputError("input contains no data rows");
    return table;
}

Table read_table_file(const std::string& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    return read_table(in, skip_header);
}

std::string format_double(double v) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_row(std::ostream& out, const double* values, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) out << ',';
        out << format_double(values[i]);
    }
    out << '\n';
}

}  // namespace odsup::csv
