#include "hirenet/types.hpp"

#include <algorithm>

namespace hirenet {

std::string_view to_string(Sport sport) {
    return sport == Sport::Football ? "football" : "basketball";
}

std::string_view to_string(Division division) {
    switch (division) {
    case Division::DivI: return "DivI";
    case Division::FBS: return "FBS";
    case Division::FCS: return "FCS";
    case Division::DivII: return "DivII";
    case Division::DivIII: return "DivIII";
    case Division::Unknown: break;
    }
    return "Unknown";
}

std::optional<Sport> parse_sport(std::string_view text) {
    if (text == "football") return Sport::Football;
    if (text == "basketball") return Sport::Basketball;
    return std::nullopt;
}

Division parse_division(std::string_view text, bool* recognized) {
    if (recognized) *recognized = true;
    if (text.empty() || text == "Unknown") return Division::Unknown;
    if (text == "DivI") return Division::DivI;
    if (text == "FBS") return Division::FBS;
    if (text == "FCS") return Division::FCS;
    if (text == "DivII") return Division::DivII;
    if (text == "DivIII") return Division::DivIII;
    if (recognized) *recognized = false;
    return Division::Unknown;
}

bool CoachRecord::served_at_alma_mater() const {
    return std::any_of(stints.begin(), stints.end(),
                       [&](const Stint& s) { return s.school == alma_mater; });
}

Division SchoolInfo::division_for(Sport sport) const {
    return sport == Sport::Football ? division_football : division_basketball;
}

std::vector<int> PollTable::years() const {
    std::vector<int> out;
    for (const Entry& e : entries) {
        if (out.empty() || out.back() != e.year) out.push_back(e.year);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> PollTable::ranked_in(int year) const {
    std::vector<std::string> out;
    for (const Entry& e : entries) {
        if (e.year == year) out.push_back(e.school);
    }
    return out; // entries are rank-sorted within a year
}

} // namespace hirenet
