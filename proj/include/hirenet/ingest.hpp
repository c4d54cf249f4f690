#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hirenet/types.hpp"

namespace hirenet {

// Rows discarded while parsing coach records, by reason. Each dropped row
// is counted once, under the first failing check.
struct DropReport {
    std::size_t missing_alma_mater = 0;
    std::size_t missing_grad_year = 0;
    std::size_t stint_before_graduation = 0;
    std::size_t malformed_row = 0;

    std::size_t total() const {
        return missing_alma_mater + missing_grad_year + stint_before_graduation + malformed_row;
    }
};

// Parses coaches.csv (`coach_id,name,alma_mater,grad_year,school,start_year,end_year`,
// one row per stint). Rows sharing a coach_id merge into one record; every
// surviving row becomes a stint, so the sum of stored stints plus
// DropReport::total() equals the number of data rows.
std::pair<std::vector<CoachRecord>, DropReport> parse_coach_records(const std::string& path);

struct SchoolTableResult {
    SchoolTable schools;
    std::size_t duplicate_ids = 0;      // later row replaced an earlier one
    std::size_t rejected_rows = 0;      // coordinate out of range or unparseable
    std::size_t unknown_divisions = 0;  // unexpected division token mapped to Unknown

    std::size_t warnings() const { return duplicate_ids + rejected_rows + unknown_divisions; }
};

// Parses schools.csv (`school,display_name,latitude,longitude,division_basketball,division_football`).
// Empty coordinates are allowed and leave the school without a position.
SchoolTableResult parse_school_table(const std::string& path);

// Parses ap_polls.csv (`sport,year,rank,school`) and returns the table for
// one sport. The whole file is validated regardless of the sport filter.
PollTable parse_ap_polls(const std::string& path, Sport sport);

} // namespace hirenet
