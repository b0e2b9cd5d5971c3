#ifndef LINESPECT_IO_HPP
#define LINESPECT_IO_HPP

#include <string>
#include <vector>

namespace linespect::io {

/// Fixed "%.15g" rendering used for all CSV numbers, so identical inputs
/// produce byte-identical files.
std::string format_double(double v);

/// Quotes a field if it contains a comma, quote or newline (RFC-4180 style).
std::string csv_escape(const std::string& field);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
};

/// Writes content to path, or to stdout when path is "-".
void write_text(const std::string& path, const std::string& content);

} // namespace linespect::io

#endif
