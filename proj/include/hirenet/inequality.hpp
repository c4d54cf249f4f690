#pragma once

#include <cstddef>
#include <vector>

#include "hirenet/network.hpp"

namespace hirenet {

// Cumulative share of production versus share of schools, largest
// producers first: the curve starts at (0,0), ends at (1,1) and lies on or
// above the diagonal.
struct LorenzCurve {
    struct Point {
        double population_fraction = 0;
        double value_fraction = 0;
    };
    std::vector<Point> points; // (0,0) followed by one point per value
};

struct InequalityReport {
    double gini_out = 0;
    double gini_in = 0;
    double coverage_50 = 0; // fraction of schools covering half the coaches
    std::size_t net_producers = 0;
    double net_producer_fraction = 0;
};

// Mean-absolute-difference Gini over non-negative values; lies in
// [0, 1 - 1/n]. Throws DataError when every value is zero,
// std::invalid_argument on an empty list or a negative value.
double gini(const std::vector<double>& values);

LorenzCurve lorenz(const std::vector<double>& values);

// Smallest k such that the k largest values reach `target` of the total,
// returned as k/n. target must lie in (0, 1].
double coverage_fraction(const std::vector<double>& values, double target);

// Gini over out- and in-degrees of every node (zero-degree nodes included),
// coverage of half the coach production, and the count of schools producing
// strictly more coaches than they hired.
InequalityReport inequality_report(const HiringNetwork& network);

} // namespace hirenet
