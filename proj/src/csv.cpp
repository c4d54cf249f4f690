#include "hirenet/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hirenet/errors.hpp"

namespace hirenet {

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    // Strip a UTF-8 BOM if present.
    if (text.size() >= 3 && text.substr(0, 3) == "\xef\xbb\xbf") text.remove_prefix(3);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false; // current row has content

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        // A lone empty field is a blank line; skip it.
        if (row.size() != 1 || !row[0].empty()) rows.push_back(std::move(row));
        row.clear();
        field_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            field_started = true;
            break;
        case ',':
            end_field();
            field_started = true;
            break;
        case '\r':
            break;
        case '\n':
            end_row();
            break;
        default:
            field += c;
            field_started = true;
            break;
        }
    }
    if (in_quotes) throw SchemaError("csv: unterminated quoted field");
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw DataError("i/o error while reading: " + path);

    auto rows = parse_csv(buf.str());
    if (rows.empty()) throw SchemaError(path + ": empty file, expected a header row");

    CsvTable table;
    table.header = std::move(rows.front());
    table.rows.assign(std::make_move_iterator(rows.begin() + 1), std::make_move_iterator(rows.end()));
    return table;
}

std::string csv_field(std::string_view value) {
    bool needs_quotes = value.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(value);
    std::string out;
    out.reserve(value.size() + 2);
    out += '"';
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void append_csv_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

} // namespace hirenet
