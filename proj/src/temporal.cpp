#include "hirenet/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hirenet/errors.hpp"

namespace hirenet {

namespace {

// Smallest integer k with k >= fraction * total, guarded against the
// product landing a hair above its rational value (0.3 * 10 is not 3.0 in
// binary floating point).
std::size_t required_count(double fraction, std::size_t total) {
    double need = std::ceil(fraction * static_cast<double>(total) - 1e-9);
    return need < 1 ? 1 : static_cast<std::size_t>(need);
}

} // namespace

std::map<int, std::size_t> graduation_histogram(const std::vector<CoachRecord>& records) {
    std::map<int, std::size_t> counts;
    for (const CoachRecord& r : records) ++counts[r.grad_year];
    return counts;
}

GrowthTimeHistogram growth_time_histogram(const std::vector<CoachRecord>& records) {
    GrowthTimeHistogram hist;
    double sum = 0;
    for (const CoachRecord& r : records) {
        if (r.stints.empty()) throw std::invalid_argument("growth_time_histogram: coach without stints");
        const int growth = r.stints.front().start_year - r.grad_year;
        ++hist.counts[growth];
        sum += growth;
    }
    hist.mean = records.empty() ? 0.0 : sum / static_cast<double>(records.size());
    return hist;
}

std::vector<Window> extract_windows(const std::vector<CoachRecord>& records, double fraction) {
    if (records.empty()) throw std::invalid_argument("extract_windows: no records");
    if (!(fraction > 0) || fraction > 1) throw std::invalid_argument("extract_windows: fraction outside (0,1]");

    const auto histogram = graduation_histogram(records);
    std::vector<int> years;
    std::vector<std::size_t> counts;
    for (const auto& [year, count] : histogram) {
        years.push_back(year);
        counts.push_back(count);
    }
    // prefix[i] = coaches graduating in years[0..i-1]
    std::vector<std::size_t> prefix(years.size() + 1, 0);
    for (std::size_t i = 0; i < years.size(); ++i) prefix[i + 1] = prefix[i] + counts[i];

    const std::size_t need = required_count(fraction, records.size());
    std::vector<Window> windows;
    for (std::size_t e = years.size(); e-- > 0;) {
        // Largest start index keeping at least `need` coaches in [start, e].
        std::size_t in_window = 0;
        std::size_t start = e + 1;
        while (start-- > 0) {
            in_window = prefix[e + 1] - prefix[start];
            if (in_window >= need) break;
            if (start == 0) break;
        }
        if (in_window < need) break; // even the full prefix falls short; older t_e only shrink
        windows.push_back({years[start], years[e], in_window});
    }
    return windows;
}

HiringNetwork subnetwork(const HiringNetwork& network, const Window& window) {
    if (window.t_s > window.t_e) throw std::invalid_argument("subnetwork: t_s > t_e");
    std::vector<RawHire> kept;
    for (const HiringEdge& e : network.edges()) {
        if (e.grad_year < window.t_s || e.grad_year > window.t_e) continue;
        kept.push_back({network.id_of(e.src), network.id_of(e.dst), e.coach_id, e.grad_year,
                        e.hire_year, e.tenure_years});
    }
    if (kept.empty()) {
        throw DataError("subnetwork: no hire falls in window [" + std::to_string(window.t_s) + "," +
                        std::to_string(window.t_e) + "]");
    }

    // Carry over the attached school attributes for surviving nodes.
    SchoolTable info;
    for (const SchoolInfo& i : network.node_info()) info.emplace(i.school, i);
    return HiringNetwork::from_edges(network.sport(), std::move(kept), info);
}

} // namespace hirenet
