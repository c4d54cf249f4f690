#include "hirenet/rankcorr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hirenet/errors.hpp"
#include "hirenet/parallel.hpp"

namespace hirenet {

std::string YearSpan::label() const {
    return std::to_string(start) + "-" + std::to_string(end);
}

std::map<std::string, double> fill_average_rank(const std::vector<std::string>& ranked,
                                                const std::set<std::string>& universe) {
    const std::size_t m = ranked.size();
    if (m > universe.size()) throw DataError("fill_average_rank: more ranked schools than universe");
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (!universe.count(ranked[i])) {
            throw DataError("fill_average_rank: ranked school '" + ranked[i] + "' outside universe");
        }
        if (!out.emplace(ranked[i], static_cast<double>(i + 1)).second) {
            throw DataError("fill_average_rank: school '" + ranked[i] + "' ranked twice");
        }
    }
    const std::size_t n = universe.size() - m;
    const double fill = (static_cast<double>(m) + 1.0 + static_cast<double>(n)) / 2.0;
    for (const std::string& school : universe) {
        out.emplace(school, fill); // no-op for ranked schools
    }
    return out;
}

Ranking median_rank_aggregate(const std::vector<std::map<std::string, double>>& filled) {
    if (filled.empty()) throw std::invalid_argument("median_rank_aggregate: no rankings");
    const auto& first = filled.front();
    for (const auto& ranking : filled) {
        if (ranking.size() != first.size() ||
            !std::equal(ranking.begin(), ranking.end(), first.begin(),
                        [](const auto& a, const auto& b) { return a.first == b.first; })) {
            throw DataError("median_rank_aggregate: rankings cover different universes");
        }
    }

    struct Key {
        std::string school;
        double median;
        double mean;
    };
    std::vector<Key> keys;
    keys.reserve(first.size());
    std::vector<double> values(filled.size());
    for (const auto& [school, unused] : first) {
        (void)unused;
        double sum = 0;
        for (std::size_t k = 0; k < filled.size(); ++k) {
            values[k] = filled[k].at(school);
            sum += values[k];
        }
        std::sort(values.begin(), values.end());
        const std::size_t half = values.size() / 2;
        const double median = values.size() % 2 ? values[half] : (values[half - 1] + values[half]) / 2.0;
        keys.push_back({school, median, sum / static_cast<double>(filled.size())});
    }

    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.median != b.median) return a.median < b.median;
        if (a.mean != b.mean) return a.mean < b.mean;
        return a.school < b.school;
    });

    Ranking ranking;
    ranking.method = RankMethod::Aggregated;
    ranking.entries.reserve(keys.size());
    int rank = 1;
    for (Key& key : keys) {
        ranking.entries.push_back({std::move(key.school), key.median, rank++});
    }
    return ranking;
}

double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("kendall_tau: lists must have equal length >= 2");

    // Sort/merge route: sort by (x, y), count x-ties and joint ties from
    // runs, then count discordant pairs as y-inversions by merge sort.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });

    auto pairs_in_runs = [](auto begin, auto end, auto same) {
        double pairs = 0;
        auto run_start = begin;
        for (auto it = begin; it != end; ++it) {
            if (it != run_start && !same(*run_start, *it)) run_start = it;
            pairs += static_cast<double>(it - run_start);
        }
        return pairs;
    };

    const double xtie = pairs_in_runs(idx.begin(), idx.end(),
                                      [&](std::size_t a, std::size_t b) { return x[a] == x[b]; });
    const double joint = pairs_in_runs(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return x[a] == x[b] && y[a] == y[b];
    });

    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];

    // Merge sort counting strict inversions (y_i > y_j with i < j).
    double discordant = 0;
    std::vector<double> buffer(n);
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t a = lo, b = mid, out = lo;
            while (a < mid && b < hi) {
                if (ys[a] <= ys[b]) {
                    buffer[out++] = ys[a++];
                } else {
                    discordant += static_cast<double>(mid - a);
                    buffer[out++] = ys[b++];
                }
            }
            while (a < mid) buffer[out++] = ys[a++];
            while (b < hi) buffer[out++] = ys[b++];
            std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo),
                      buffer.begin() + static_cast<std::ptrdiff_t>(hi),
                      ys.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }

    std::vector<double> ysorted = y;
    std::sort(ysorted.begin(), ysorted.end());
    const double ytie = pairs_in_runs(ysorted.begin(), ysorted.end(),
                                      [](double a, double b) { return a == b; });

    const double total = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    if (xtie == total || ytie == total) {
        throw DataError("kendall_tau: a list is entirely tied, tau-b undefined");
    }
    const double concordant_minus_discordant = total - xtie - ytie + joint - 2.0 * discordant;
    return concordant_minus_discordant / (std::sqrt(total - xtie) * std::sqrt(total - ytie));
}

std::vector<AggregatedPoll> aggregate_polls(const PollTable& table, int span_years, bool rolling,
                                            UniverseRule rule) {
    if (span_years < 1) throw std::invalid_argument("aggregate_polls: span_years < 1");
    const std::vector<int> years = table.years();
    if (years.empty()) return {};

    const int first = years.front();
    const int last = years.back();
    const int stride = rolling ? 1 : span_years;

    std::vector<AggregatedPoll> out;
    for (int start = first; start <= last; start += stride) {
        const YearSpan span{start, start + span_years - 1};
        std::vector<int> span_yrs;
        for (int y : years) {
            if (y >= span.start && y <= span.end) span_yrs.push_back(y);
        }
        if (span_yrs.empty()) continue;

        std::set<std::string> universe;
        if (rule == UniverseRule::AnyYear) {
            for (int y : span_yrs) {
                for (const auto& school : table.ranked_in(y)) universe.insert(school);
            }
        } else {
            bool started = false;
            for (int y : span_yrs) {
                std::set<std::string> voted;
                for (const auto& school : table.ranked_in(y)) voted.insert(school);
                if (!started) {
                    universe = std::move(voted);
                    started = true;
                } else {
                    std::set<std::string> kept;
                    std::set_intersection(universe.begin(), universe.end(), voted.begin(), voted.end(),
                                          std::inserter(kept, kept.begin()));
                    universe = std::move(kept);
                }
            }
        }
        if (universe.empty()) continue;

        std::vector<std::map<std::string, double>> filled;
        for (int y : span_yrs) {
            std::vector<std::string> ranked;
            for (const auto& school : table.ranked_in(y)) {
                // Under the every-year rule, schools outside the universe are
                // simply not part of this span's ranking problem.
                if (universe.count(school)) ranked.push_back(school);
            }
            filled.push_back(fill_average_rank(ranked, universe));
        }

        AggregatedPoll agg;
        agg.span = span;
        agg.universe.assign(universe.begin(), universe.end());
        agg.ranking = median_rank_aggregate(filled);
        out.push_back(std::move(agg));
    }
    return out;
}

CorrelationGrid correlation_grid(const std::vector<AggregatedPoll>& polls,
                                 const std::vector<std::pair<Window, Ranking>>& production,
                                 int threads) {
    if (polls.empty() || production.empty()) {
        throw std::invalid_argument("correlation_grid: empty inputs");
    }

    CorrelationGrid grid;
    grid.rows.reserve(production.size());
    for (const auto& [window, ranking] : production) grid.rows.push_back(window);
    grid.cols.reserve(polls.size());
    for (const AggregatedPoll& poll : polls) grid.cols.push_back(poll.span);
    grid.tau.assign(production.size(),
                    std::vector<double>(polls.size(), std::numeric_limits<double>::quiet_NaN()));

    parallel_for(production.size(), threads, [&](std::size_t i) {
        const Ranking& prod = production[i].second;
        std::map<std::string, double> prod_rank;
        double worst = 0;
        for (const Ranking::Entry& entry : prod.entries) {
            prod_rank[entry.school] = entry.rank;
            worst = std::max(worst, static_cast<double>(entry.rank));
        }
        for (std::size_t j = 0; j < polls.size(); ++j) {
            const AggregatedPoll& poll = polls[j];
            std::vector<double> ap, coach;
            ap.reserve(poll.ranking.entries.size());
            coach.reserve(poll.ranking.entries.size());
            for (const Ranking::Entry& entry : poll.ranking.entries) {
                ap.push_back(entry.rank);
                auto it = prod_rank.find(entry.school);
                coach.push_back(it != prod_rank.end() ? it->second : worst + 1.0);
            }
            if (ap.size() < 2) continue; // stays NaN
            try {
                grid.tau[i][j] = kendall_tau(ap, coach);
            } catch (const DataError&) {
                // entirely tied column: leave the cell missing
            }
        }
    });
    return grid;
}

} // namespace hirenet
