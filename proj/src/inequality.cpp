#include "hirenet/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hirenet/errors.hpp"

namespace hirenet {

namespace {

void check_values(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("gini/lorenz: empty value list");
    for (double v : values) {
        if (v < 0 || !std::isfinite(v)) throw std::invalid_argument("gini/lorenz: negative or non-finite value");
    }
}

// Cumulative value fractions after sorting descending; index k holds the
// share owned by the k+1 largest values. The last entry is exactly 1.
std::vector<double> descending_cumulative_fractions(const std::vector<double>& values) {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cum = 0;
    for (double& v : sorted) {
        cum += v;
        v = cum;
    }
    const double total = sorted.back();
    if (!(total > 0)) throw DataError("lorenz/coverage: all values are zero");
    for (double& v : sorted) v /= total;
    return sorted;
}

} // namespace

double gini(const std::vector<double>& values) {
    check_values(values);
    const std::size_t n = values.size();
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    double total = 0;
    double weighted = 0; // sum of (1-based position) * value, ascending
    for (std::size_t i = 0; i < n; ++i) {
        total += sorted[i];
        weighted += static_cast<double>(i + 1) * sorted[i];
    }
    if (!(total > 0)) throw DataError("gini: all values are zero");
    // Equals the mean-absolute-difference form sum|xi-xj| / (2 n^2 mean).
    double g = (2.0 * weighted - (static_cast<double>(n) + 1.0) * total) /
               (static_cast<double>(n) * total);
    return std::max(g, 0.0);
}

LorenzCurve lorenz(const std::vector<double>& values) {
    check_values(values);
    auto fractions = descending_cumulative_fractions(values);
    LorenzCurve curve;
    curve.points.reserve(fractions.size() + 1);
    curve.points.push_back({0.0, 0.0});
    const double n = static_cast<double>(fractions.size());
    for (std::size_t k = 0; k < fractions.size(); ++k) {
        curve.points.push_back({static_cast<double>(k + 1) / n, fractions[k]});
    }
    return curve;
}

double coverage_fraction(const std::vector<double>& values, double target) {
    check_values(values);
    if (!(target > 0) || target > 1) throw std::invalid_argument("coverage_fraction: target outside (0,1]");
    auto fractions = descending_cumulative_fractions(values);
    for (std::size_t k = 0; k < fractions.size(); ++k) {
        if (fractions[k] >= target) {
            return static_cast<double>(k + 1) / static_cast<double>(fractions.size());
        }
    }
    return 1.0; // fractions end at exactly 1, so only reachable when target == 1 ties at rounding
}

InequalityReport inequality_report(const HiringNetwork& network) {
    if (network.node_count() == 0) throw DataError("inequality_report: empty network");
    auto out_deg = out_degree_vector(network);
    auto in_deg = in_degree_vector(network);
    std::vector<double> out_values(out_deg.begin(), out_deg.end());
    std::vector<double> in_values(in_deg.begin(), in_deg.end());

    InequalityReport report;
    report.gini_out = gini(out_values);
    report.gini_in = gini(in_values);
    report.coverage_50 = coverage_fraction(out_values, 0.5);
    for (std::size_t i = 0; i < out_deg.size(); ++i) {
        if (out_deg[i] > in_deg[i]) ++report.net_producers;
    }
    report.net_producer_fraction =
        static_cast<double>(report.net_producers) / static_cast<double>(network.node_count());
    return report;
}

} // namespace hirenet
