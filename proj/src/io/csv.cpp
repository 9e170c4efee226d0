#include "fluxring/io/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace fluxring::io {

std::string format_double(double v)
{
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns)
{
    if (header.size() != columns.size())
        throw std::invalid_argument("csv: header/column count mismatch");
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("csv: ragged columns");

    std::string out;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j) out += ',';
        out += header[j];
    }
    out += '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (j) out += ',';
            out += format_double(columns[j][i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           std::vector<std::string>& header)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");

    header.clear();
    std::istringstream hs(line);
    for (std::string cell; std::getline(hs, cell, ',');) header.push_back(cell);

    std::vector<std::vector<double>> columns(header.size());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::size_t j = 0;
        for (std::string cell; std::getline(ls, cell, ','); ++j) {
            if (j >= columns.size()) throw std::invalid_argument("csv: row too wide");
            columns[j].push_back(std::strtod(cell.c_str(), nullptr));
        }
        if (j != columns.size()) throw std::invalid_argument("csv: row too short");
    }
    return columns;
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("rename to " + path + " failed: " + ec.message());
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace fluxring::io
