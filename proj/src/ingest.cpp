#include "hirenet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "hirenet/csv.hpp"
#include "hirenet/errors.hpp"

namespace hirenet {

namespace {

std::optional<int> parse_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

std::optional<double> parse_real(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // std::from_chars for double is spotty on older libstdc++; strtod is fine here.
    std::string buf(text);
    char* end = nullptr;
    double value = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return std::nullopt;
    return value;
}

void require_header(const CsvTable& table, const std::vector<std::string>& expected,
                    const std::string& path) {
    for (const std::string& column : expected) {
        if (std::find(table.header.begin(), table.header.end(), column) == table.header.end()) {
            throw SchemaError(path + ": missing column '" + column + "'");
        }
    }
    if (table.header != expected) {
        throw SchemaError(path + ": header must be exactly the documented column order");
    }
}

} // namespace

std::pair<std::vector<CoachRecord>, DropReport> parse_coach_records(const std::string& path) {
    CsvTable table = read_csv_file(path);
    require_header(table, {"coach_id", "name", "alma_mater", "grad_year", "school", "start_year", "end_year"},
                   path);

    std::vector<CoachRecord> records;
    std::map<std::string, std::size_t> by_id; // coach_id -> index into records
    DropReport report;

    for (const auto& row : table.rows) {
        if (row.size() != 7) {
            ++report.malformed_row;
            continue;
        }
        const std::string& coach_id = row[0];
        const std::string& name = row[1];
        const std::string& alma = row[2];
        if (coach_id.empty()) {
            ++report.malformed_row;
            continue;
        }
        if (alma.empty()) {
            ++report.missing_alma_mater;
            continue;
        }
        if (row[3].empty()) {
            ++report.missing_grad_year;
            continue;
        }
        auto grad = parse_int(row[3]);
        auto start = parse_int(row[5]);
        auto end = parse_int(row[6]);
        if (!grad || !start || !end || row[4].empty() || *end < *start) {
            ++report.malformed_row;
            continue;
        }
        if (*start < *grad) {
            ++report.stint_before_graduation;
            continue;
        }

        auto it = by_id.find(coach_id);
        if (it == by_id.end()) {
            CoachRecord record;
            record.coach_id = coach_id;
            record.name = name;
            record.alma_mater = alma;
            record.grad_year = *grad;
            record.stints.push_back({row[4], *start, *end});
            by_id.emplace(coach_id, records.size());
            records.push_back(std::move(record));
        } else {
            CoachRecord& record = records[it->second];
            // Rows of one coach must agree on the identity fields.
            if (record.name != name || record.alma_mater != alma || record.grad_year != *grad) {
                ++report.malformed_row;
                continue;
            }
            record.stints.push_back({row[4], *start, *end});
        }
    }

    for (CoachRecord& record : records) {
        std::stable_sort(record.stints.begin(), record.stints.end(),
                         [](const Stint& a, const Stint& b) {
                             return std::tie(a.start_year, a.end_year) < std::tie(b.start_year, b.end_year);
                         });
    }
    return {std::move(records), report};
}

SchoolTableResult parse_school_table(const std::string& path) {
    CsvTable table = read_csv_file(path);
    require_header(table,
                   {"school", "display_name", "latitude", "longitude", "division_basketball",
                    "division_football"},
                   path);

    SchoolTableResult result;
    for (const auto& row : table.rows) {
        if (row.size() != 6 || row[0].empty()) {
            ++result.rejected_rows;
            continue;
        }
        SchoolInfo info;
        info.school = row[0];
        info.display_name = row[1].empty() ? row[0] : row[1];

        bool bad_coord = false;
        if (!row[2].empty()) {
            auto lat = parse_real(row[2]);
            if (!lat || *lat < -90.0 || *lat > 90.0) bad_coord = true;
            else info.latitude = *lat;
        }
        if (!row[3].empty()) {
            auto lon = parse_real(row[3]);
            if (!lon || *lon < -180.0 || *lon > 180.0) bad_coord = true;
            else info.longitude = *lon;
        }
        if (bad_coord) {
            ++result.rejected_rows;
            continue;
        }

        bool ok_bk = true, ok_fb = true;
        info.division_basketball = parse_division(row[4], &ok_bk);
        info.division_football = parse_division(row[5], &ok_fb);
        if (!ok_bk) ++result.unknown_divisions;
        if (!ok_fb) ++result.unknown_divisions;

        auto [it, inserted] = result.schools.insert_or_assign(info.school, std::move(info));
        (void)it;
        if (!inserted) ++result.duplicate_ids; // last row wins
    }
    return result;
}

PollTable parse_ap_polls(const std::string& path, Sport sport) {
    CsvTable table = read_csv_file(path);
    require_header(table, {"sport", "year", "rank", "school"}, path);

    // (sport, year) -> rank -> school, validating as we go.
    std::map<std::pair<int, int>, std::map<int, std::string>> by_year;
    std::map<std::pair<int, int>, std::set<std::string>> seen_schools;

    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        if (row.size() != 4) throw SchemaError(path + ": row " + std::to_string(i + 2) + " malformed");
        auto row_sport = parse_sport(row[0]);
        if (!row_sport) throw SchemaError(path + ": unknown sport '" + row[0] + "'");
        auto year = parse_int(row[1]);
        auto rank = parse_int(row[2]);
        if (!year || !rank || *rank < 1 || row[3].empty()) {
            throw SchemaError(path + ": row " + std::to_string(i + 2) + " malformed");
        }
        std::pair<int, int> key{static_cast<int>(*row_sport), *year};
        auto [it, inserted] = by_year[key].emplace(*rank, row[3]);
        (void)it;
        if (!inserted) {
            throw SchemaError(path + ": duplicate rank " + std::to_string(*rank) + " in year " + row[1]);
        }
        if (!seen_schools[key].insert(row[3]).second) {
            throw SchemaError(path + ": school '" + row[3] + "' ranked twice in year " + row[1]);
        }
    }

    PollTable out;
    out.sport = sport;
    for (const auto& [key, ranks] : by_year) {
        // Ranks must form 1..m with no gaps.
        int expected = 1;
        for (const auto& [rank, school] : ranks) {
            if (rank != expected) {
                throw SchemaError(path + ": ranks in year " + std::to_string(key.second) +
                                  " are not 1.." + std::to_string(ranks.size()));
            }
            ++expected;
        }
        if (key.first != static_cast<int>(sport)) continue;
        for (const auto& [rank, school] : ranks) {
            out.entries.push_back({key.second, rank, school});
        }
    }
    return out;
}

} // namespace hirenet
