#pragma once

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/io/file.hpp"

namespace satcluster {

/// Shortest round-trip decimal representation; deterministic for a given
/// platform, which is what the byte-identical-outputs guarantee rests on.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells) {
        if (cells.size() != header.size())
            throw std::invalid_argument("CsvTable: row width does not match header");
        rows.push_back(std::move(cells));
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t c = 0; c < header.size(); ++c)
            out << (c ? "," : "") << header[c];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
            out << '\n';
        }
        return out.str();
    }
};

inline void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    write_file_atomic(path, table.to_string());
}

/// Parses the simple comma-separated files this toolkit emits (no quoting);
/// errors carry 1-based row numbers.
inline CsvTable read_csv(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    int row_no = 0;
    while (std::getline(in, line)) {
        ++row_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (row_no == 1) {
            table.header = std::move(cells);
        } else {
            if (cells.size() != table.header.size())
                throw std::runtime_error(path.string() + ": row " + std::to_string(row_no) +
                                         ": expected " + std::to_string(table.header.size()) +
                                         " columns, got " + std::to_string(cells.size()));
            table.rows.push_back(std::move(cells));
        }
    }
    if (table.header.empty())
        throw std::runtime_error(path.string() + ": row 1: empty file, no header");
    return table;
}

inline double csv_double(const CsvTable& table, std::size_t row, std::size_t col) {
    const std::string& cell = table.rows.at(row).at(col);
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
        throw std::runtime_error("row " + std::to_string(row + 2) + ": not a number: " + cell);
    return v;
}

inline std::size_t csv_column(const CsvTable& table, const std::string& name) {
    for (std::size_t c = 0; c < table.header.size(); ++c)
        if (table.header[c] == name) return c;
    throw std::runtime_error("missing column: " + name);
}

}  // namespace satcluster
