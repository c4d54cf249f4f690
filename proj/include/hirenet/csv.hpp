#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hirenet {

// Minimal RFC-4180 style CSV: comma separated, double-quote escaping,
// quotes doubled inside quoted fields, CR/LF tolerant. Blank lines are
// skipped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Reads and splits a CSV file; the first row becomes the header.
// Throws DataError if the file cannot be read or is empty.
CsvTable read_csv_file(const std::string& path);

// Quotes a field only when it contains a comma, quote or newline.
std::string csv_field(std::string_view value);

void append_csv_row(std::string& out, const std::vector<std::string>& fields);

// Shortest-ish decimal form used for all CSV numeric output ("%.12g").
std::string format_number(double value);

} // namespace hirenet
