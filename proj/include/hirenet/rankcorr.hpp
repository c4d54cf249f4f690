#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hirenet/ranking.hpp"
#include "hirenet/temporal.hpp"
#include "hirenet/types.hpp"

namespace hirenet {

struct YearSpan {
    int start = 0;
    int end = 0; // inclusive
    std::string label() const;
};

// Which schools form the universe of a span: voted in at least one year of
// the span, or voted in every polled year of it.
enum class UniverseRule { AnyYear, EveryYear };

struct AggregatedPoll {
    YearSpan span;
    std::vector<std::string> universe; // sorted
    Ranking ranking;                   // method Aggregated, one entry per universe school
};

// Ranked schools keep their poll rank 1..m; every other universe school
// gets the shared average rank (m + 1 + n) / 2 with n unranked schools.
// Throws DataError when a ranked school is outside the universe.
std::map<std::string, double> fill_average_rank(const std::vector<std::string>& ranked,
                                                const std::set<std::string>& universe);

// Median of each school's rank values (mean of the middle two for even
// counts); ascending medians, ties by mean rank then school id. All inputs
// must cover the same universe.
Ranking median_rank_aggregate(const std::vector<std::map<std::string, double>>& filled);

// Tie-corrected Kendall tau-b via the O(n log n) sort/merge route. Throws
// DataError when either list is entirely tied.
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

// Splits the poll into spans of `span_years` (stride = span_years, or 1
// when rolling) starting at the earliest polled year, builds the universe
// per `rule`, average-rank fills each polled year and aggregates by median
// rank. Spans without any polled year are dropped.
std::vector<AggregatedPoll> aggregate_polls(const PollTable& table, int span_years = 20,
                                            bool rolling = false,
                                            UniverseRule rule = UniverseRule::AnyYear);

struct CorrelationGrid {
    std::vector<Window> rows;  // coach-production windows
    std::vector<YearSpan> cols; // AP spans
    std::vector<std::vector<double>> tau; // NaN marks an undefined cell
};

// Cell (i, j): tau between the aggregated AP ranks of span j's universe and
// the production ranks of those schools in window i; universe schools
// missing from the production ranking share the worst production rank + 1.
CorrelationGrid correlation_grid(const std::vector<AggregatedPoll>& polls,
                                 const std::vector<std::pair<Window, Ranking>>& production,
                                 int threads = 1);

} // namespace hirenet
