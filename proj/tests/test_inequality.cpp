#include <doctest.h>

#include <random>

#include "hirenet/errors.hpp"
#include "hirenet/inequality.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace hirenet;

namespace {

std::vector<double> random_values(std::mt19937& rng, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::uniform_int_distribution<int> zeroed(0, 3);
    std::vector<double> out(size(rng));
    bool any_positive = false;
    for (double& v : out) {
        v = zeroed(rng) == 0 ? 0.0 : value(rng);
        any_positive |= v > 0;
    }
    if (!any_positive) out[0] = 1.0;
    return out;
}

} // namespace

TEST_CASE("gini exact values") {
    CHECK(gini({5, 5, 5, 5}) == 0.0);
    CHECK(gini({1, 0, 0, 0}) == 0.75);
}

TEST_CASE("gini error cases") {
    CHECK_THROWS_AS(gini({0, 0, 0}), DataError);
    CHECK_THROWS_AS(gini({}), std::invalid_argument);
    CHECK_THROWS_AS(gini({1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("gini matches the pairwise oracle and stays within [0, 1-1/n]") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        auto values = random_values(rng, 120);
        const double got = gini(values);
        CHECK(std::abs(got - oracle::gini_pairwise(values)) < 1e-9);
        CHECK(got >= 0.0);
        CHECK(got <= 1.0 - 1.0 / static_cast<double>(values.size()) + 1e-12);
    }
}

TEST_CASE("gini is scale invariant") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        auto values = random_values(rng, 60);
        auto scaled = values;
        const double c = std::uniform_real_distribution<double>(0.1, 40.0)(rng);
        for (double& v : scaled) v *= c;
        CHECK(gini(values) == doctest::Approx(gini(scaled)).epsilon(1e-12));
    }
}

TEST_CASE("gini agrees with the Lorenz-area oracle") {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 100; ++trial) {
        auto values = random_values(rng, 200);
        const double from_area = std::abs(1.0 - 2.0 * oracle::lorenz_auc(lorenz(values)));
        CHECK(std::abs(gini(values) - from_area) < 1e-9);
    }
}

TEST_CASE("lorenz hand examples") {
    auto equal = lorenz({1, 1});
    REQUIRE(equal.points.size() == 3);
    CHECK(equal.points[1].population_fraction == doctest::Approx(0.5));
    CHECK(equal.points[1].value_fraction == doctest::Approx(0.5));

    auto skewed = lorenz({3, 1});
    REQUIRE(skewed.points.size() == 3);
    CHECK(skewed.points[0].population_fraction == 0.0);
    CHECK(skewed.points[0].value_fraction == 0.0);
    CHECK(skewed.points[1].value_fraction == doctest::Approx(0.75));
    CHECK(skewed.points[2].population_fraction == 1.0);
    CHECK(skewed.points[2].value_fraction == 1.0);
}

TEST_CASE("lorenz curve shape invariants") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto values = random_values(rng, 80);
        auto curve = lorenz(values);
        REQUIRE(curve.points.size() == values.size() + 1);
        CHECK(curve.points.front().population_fraction == 0.0);
        CHECK(curve.points.front().value_fraction == 0.0);
        CHECK(curve.points.back().population_fraction == 1.0);
        CHECK(curve.points.back().value_fraction == 1.0);
        double prev_slope = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < curve.points.size(); ++i) {
            const auto& a = curve.points[i - 1];
            const auto& b = curve.points[i];
            CHECK(b.population_fraction >= a.population_fraction);
            CHECK(b.value_fraction >= a.value_fraction - 1e-12);
            // Descending sort puts the curve on or above the diagonal with
            // non-increasing slopes.
            CHECK(b.value_fraction >= b.population_fraction - 1e-12);
            const double slope = (b.value_fraction - a.value_fraction) /
                                 (b.population_fraction - a.population_fraction);
            CHECK(slope <= prev_slope + 1e-9);
            prev_slope = slope;
        }
    }
}

TEST_CASE("coverage fraction examples") {
    CHECK(coverage_fraction({1, 1, 1, 1}, 0.5) == doctest::Approx(0.5));
    CHECK(coverage_fraction({7, 1, 1, 1}, 0.5) == doctest::Approx(0.25));
}

TEST_CASE("coverage fraction is monotone in the target") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto values = random_values(rng, 50);
        double prev = 0;
        for (double target = 0.1; target <= 1.0; target += 0.1) {
            const double got = coverage_fraction(values, std::min(target, 1.0));
            CHECK(got >= prev);
            prev = got;
        }
    }
}

TEST_CASE("inequality report on a star") {
    auto net = testutil::make_network({{0, 1}, {0, 2}, {0, 3}});
    auto report = inequality_report(net);
    CHECK(report.net_producers == 1);
    CHECK(report.net_producer_fraction == doctest::Approx(0.25));
    // out-degrees are [3,0,0,0] -> gini 0.75; in-degrees [0,1,1,1] -> gini 0.25.
    CHECK(report.gini_out == doctest::Approx(0.75));
    CHECK(report.gini_in == doctest::Approx(0.25));
    CHECK(report.coverage_50 == doctest::Approx(0.25));
}
