#pragma once

#include <string>
#include <vector>

namespace fluxring::io {

// shortest decimal form that parses back to the same double
std::string format_double(double v);

// header + equal-length numeric columns, '\n' line endings
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns);

// parse a table written by csv_table; returns columns, fills header
std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           std::vector<std::string>& header);

// write-temp-then-rename so readers never observe a partial file
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace fluxring::io
