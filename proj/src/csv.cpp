#include "dimer_dg/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dimer_dg {

std::string format_scientific(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", value);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> header)
    : path_(path), n_columns_(header.size()), out_(path)
{
    if (!out_) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    row(header);
}

void CsvWriter::row(std::initializer_list<double> values)
{
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) {
        cells.push_back(format_scientific(v));
    }
    row(cells);
}

void CsvWriter::row(const std::vector<std::string>& cells)
{
    if (cells.size() != n_columns_) {
        throw std::logic_error("CsvWriter: row width does not match header in " + path_);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out_ << (i ? "," : "") << cells[i];
    }
    out_ << '\n';
    if (!out_) {
        throw std::runtime_error("write failed for '" + path_ + "'");
    }
}

}  // namespace dimer_dg
