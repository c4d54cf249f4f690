#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hirenet/network.hpp"
#include "hirenet/types.hpp"

namespace hirenet {

// Trailing graduation-year interval holding at least the requested share of
// coaches.
struct Window {
    int t_s = 0;
    int t_e = 0;
    std::size_t coach_count = 0;
};

std::map<int, std::size_t> graduation_histogram(const std::vector<CoachRecord>& records);

struct GrowthTimeHistogram {
    std::map<int, std::size_t> counts; // years from graduation to first head job
    double mean = 0;
};

GrowthTimeHistogram growth_time_histogram(const std::vector<CoachRecord>& records);

// Enumerates t_e over distinct graduation years from the latest downward;
// for each, t_s is the largest year so that coaches graduating in
// [t_s, t_e] number at least ceil(fraction * total). Windows that cannot
// reach the floor are omitted.
std::vector<Window> extract_windows(const std::vector<CoachRecord>& records, double fraction);

// Keeps edges whose grad_year lies in the window; the node set shrinks to
// the endpoints of surviving edges. Throws DataError when nothing survives.
HiringNetwork subnetwork(const HiringNetwork& network, const Window& window);

} // namespace hirenet
