#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hirenet {

enum class Sport { Football, Basketball };

// NCAA competitive tiers. Basketball uses DivI; football splits its
// division I into FBS and FCS.
enum class Division { DivI, FBS, FCS, DivII, DivIII, Unknown };

std::string_view to_string(Sport sport);
std::string_view to_string(Division division);
std::optional<Sport> parse_sport(std::string_view text);

// Empty text maps to Unknown and counts as recognized; any other
// unexpected token also maps to Unknown but sets *recognized = false.
Division parse_division(std::string_view text, bool* recognized = nullptr);

// One continuous head-coach appointment.
struct Stint {
    std::string school;
    int start_year = 0;
    int end_year = 0; // inclusive, >= start_year
};

// One coach: where they graduated, when, and the head-coach jobs they held.
struct CoachRecord {
    std::string coach_id;
    std::string name;
    std::string alma_mater; // non-empty
    int grad_year = 0;
    std::vector<Stint> stints; // non-empty, sorted by start_year

    bool served_at_alma_mater() const;
};

struct SchoolInfo {
    std::string school;
    std::string display_name;
    std::optional<double> latitude;  // degrees, [-90, 90]
    std::optional<double> longitude; // degrees, [-180, 180]
    Division division_basketball = Division::Unknown;
    Division division_football = Division::Unknown;

    Division division_for(Sport sport) const;
    bool has_coordinates() const { return latitude.has_value() && longitude.has_value(); }
};

using SchoolTable = std::map<std::string, SchoolInfo>;

// AP poll entries for one sport. Validated on parse: within a year the
// ranks form 1..m with no duplicates and no school appearing twice.
struct PollTable {
    struct Entry {
        int year = 0;
        int rank = 0;
        std::string school;
    };

    Sport sport = Sport::Football;
    std::vector<Entry> entries; // sorted by (year, rank)

    std::vector<int> years() const;                     // distinct, ascending
    std::vector<std::string> ranked_in(int year) const; // best rank first
};

} // namespace hirenet
