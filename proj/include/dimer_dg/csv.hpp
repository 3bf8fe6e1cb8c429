#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace dimer_dg {

/// Formats a value as %.12e; non-finite values print as nan/inf.
std::string format_scientific(double value);

/// Comma-separated writer with a fixed header. Numbers use scientific
/// notation with 13 significant digits.
class CsvWriter {
public:
    CsvWriter(const std::string& path, std::vector<std::string> header);

    void row(std::initializer_list<double> values);
    void row(const std::vector<std::string>& cells);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
    std::size_t n_columns_;
    std::ofstream out_;
};

}  // namespace dimer_dg
