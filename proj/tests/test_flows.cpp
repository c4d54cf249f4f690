#include <doctest.h>

#include <random>

#include "hirenet/errors.hpp"
#include "hirenet/flows.hpp"

#include "helpers.hpp"

using namespace hirenet;

namespace {

SchoolTable school_with_division(const std::vector<std::pair<std::string, Division>>& entries,
                                 Sport sport) {
    SchoolTable table;
    for (const auto& [school, division] : entries) {
        SchoolInfo info;
        info.school = school;
        info.display_name = school;
        if (sport == Sport::Football) info.division_football = division;
        else info.division_basketball = division;
        table.emplace(school, info);
    }
    return table;
}

} // namespace

TEST_CASE("all hires inside one division concentrate the matrix") {
    auto schools = school_with_division({{"a", Division::DivIII}, {"b", Division::DivIII}},
                                        Sport::Basketball);
    std::vector<RawHire> hires{{"a", "b", "c1", 1980, 1990, 1}, {"b", "a", "c2", 1985, 1995, 1}};
    auto net = HiringNetwork::from_edges(Sport::Basketball, hires, schools);
    auto matrix = division_flow_matrix(net, schools, 1973);
    REQUIRE(matrix.divisions == std::vector<Division>{Division::DivI, Division::DivII, Division::DivIII});
    CHECK(matrix.fractions[2][2] == doctest::Approx(1.0));
    CHECK(matrix.fractions[0][0] == 0.0);
    CHECK(matrix.n_edges_used == 2);
    CHECK(matrix.n_edges_skipped == 0);
    CHECK(matrix.row_totals[2] == doctest::Approx(1.0));
    CHECK(matrix.col_totals[2] == doctest::Approx(1.0));
}

TEST_CASE("football uses the four-way division set") {
    auto schools = school_with_division(
        {{"a", Division::FBS}, {"b", Division::FCS}, {"c", Division::DivII}, {"d", Division::DivIII}},
        Sport::Football);
    std::vector<RawHire> hires{{"a", "b", "c1", 1980, 1990, 1},
                               {"c", "d", "c2", 1985, 1995, 1},
                               {"a", "a", "c3", 1990, 2000, 1}};
    auto net = HiringNetwork::from_edges(Sport::Football, hires, schools);
    auto matrix = division_flow_matrix(net, schools, 1973);
    REQUIRE(matrix.divisions ==
            std::vector<Division>{Division::FBS, Division::FCS, Division::DivII, Division::DivIII});
    CHECK(matrix.fractions[0][1] == doctest::Approx(1.0 / 3));
    CHECK(matrix.fractions[2][3] == doctest::Approx(1.0 / 3));
    CHECK(matrix.fractions[0][0] == doctest::Approx(1.0 / 3));
}

TEST_CASE("cutoff is strict by default, inclusive behind the flag") {
    auto schools = school_with_division({{"a", Division::DivI}, {"b", Division::DivII}},
                                        Sport::Basketball);
    std::vector<RawHire> hires{{"a", "b", "c1", 1973, 1980, 1}, {"a", "b", "c2", 1974, 1984, 1}};
    auto net = HiringNetwork::from_edges(Sport::Basketball, hires, schools);
    CHECK(division_flow_matrix(net, schools, 1973).n_edges_used == 1);
    CHECK(division_flow_matrix(net, schools, 1973, true).n_edges_used == 2);
}

TEST_CASE("unlabeled endpoints are skipped and counted") {
    auto schools = school_with_division({{"a", Division::DivI}, {"b", Division::DivII}},
                                        Sport::Basketball);
    std::vector<RawHire> hires{{"a", "b", "c1", 1980, 1990, 1},
                               {"a", "mystery", "c2", 1980, 1990, 1},
                               {"mystery", "b", "c3", 1950, 1960, 1}}; // pre-cutoff, ignored entirely
    auto net = HiringNetwork::from_edges(Sport::Basketball, hires, schools);
    auto matrix = division_flow_matrix(net, schools, 1973);
    CHECK(matrix.n_edges_used == 1);
    CHECK(matrix.n_edges_skipped == 1);
}

TEST_CASE("zero usable edges is an error") {
    auto schools = school_with_division({{"a", Division::DivI}, {"b", Division::DivII}},
                                        Sport::Basketball);
    std::vector<RawHire> hires{{"a", "b", "c1", 1950, 1960, 1}};
    auto net = HiringNetwork::from_edges(Sport::Basketball, hires, schools);
    CHECK_THROWS_AS(division_flow_matrix(net, schools, 1973), DataError);
}

TEST_CASE("conservation on random fixtures") {
    std::mt19937 rng(61);
    const std::vector<Division> bk{Division::DivI, Division::DivII, Division::DivIII,
                                   Division::Unknown};
    for (int trial = 0; trial < 100; ++trial) {
        SchoolTable schools;
        const int n = std::uniform_int_distribution<int>(2, 10)(rng);
        for (int i = 0; i < n; ++i) {
            SchoolInfo info;
            info.school = testutil::node_name(i);
            info.display_name = info.school;
            info.division_basketball = bk[std::uniform_int_distribution<std::size_t>(0, bk.size() - 1)(rng)];
            schools.emplace(info.school, info);
        }
        std::vector<RawHire> hires;
        const int m = std::uniform_int_distribution<int>(1, 50)(rng);
        for (int e = 0; e < m; ++e) {
            const int grad = 1960 + std::uniform_int_distribution<int>(0, 40)(rng);
            hires.push_back({testutil::node_name(std::uniform_int_distribution<int>(0, n - 1)(rng)),
                             testutil::node_name(std::uniform_int_distribution<int>(0, n - 1)(rng)),
                             "c" + std::to_string(e), grad, grad + 10, 3});
        }
        auto net = HiringNetwork::from_edges(Sport::Basketball, hires, schools);

        std::size_t post_cutoff = 0;
        for (const auto& h : hires) {
            if (h.grad_year > 1973) ++post_cutoff;
        }
        FlowMatrix matrix;
        try {
            matrix = division_flow_matrix(net, schools, 1973);
        } catch (const DataError&) {
            continue; // no usable edge this draw
        }
        CHECK(matrix.n_edges_used + matrix.n_edges_skipped == post_cutoff);
        double sum = 0;
        for (const auto& row : matrix.fractions) {
            for (double cell : row) sum += cell;
        }
        CHECK(std::abs(sum - 1.0) < 1e-9);

        // Duplicating every edge leaves the fractions unchanged.
        std::vector<RawHire> doubled = hires;
        for (auto h : hires) {
            h.coach_id += "_copy";
            doubled.push_back(h);
        }
        auto net2 = HiringNetwork::from_edges(Sport::Basketball, doubled, schools);
        auto matrix2 = division_flow_matrix(net2, schools, 1973);
        for (std::size_t r = 0; r < matrix.fractions.size(); ++r) {
            for (std::size_t c = 0; c < matrix.fractions.size(); ++c) {
                CHECK(matrix2.fractions[r][c] == doctest::Approx(matrix.fractions[r][c]).epsilon(1e-12));
            }
        }

        // The matrix recomputed from a serialized checkpoint is identical.
        testutil::TempDir dir;
        auto path = (dir.path / "edges.csv").string();
        write_edge_list(net, path);
        auto reloaded = read_edge_list(path, Sport::Basketball, schools);
        auto matrix3 = division_flow_matrix(reloaded, schools, 1973);
        for (std::size_t r = 0; r < matrix.fractions.size(); ++r) {
            for (std::size_t c = 0; c < matrix.fractions.size(); ++c) {
                CHECK(matrix3.fractions[r][c] == matrix.fractions[r][c]);
            }
        }
    }
}

TEST_CASE("flow findings") {
    FlowMatrix matrix;
    matrix.sport = Sport::Basketball;
    matrix.divisions = {Division::DivI, Division::DivII, Division::DivIII};

    SUBCASE("identity-like matrix is diagonally dominant") {
        matrix.fractions = {{0.4, 0.05, 0.05}, {0.05, 0.2, 0.05}, {0.05, 0.05, 0.1}};
        auto findings = flow_findings(matrix);
        CHECK(findings.all_diagonal_dominant);
        CHECK(findings.top_division_downward == doctest::Approx(0.10));
        CHECK(findings.top_division_upward == doctest::Approx(0.10));
        CHECK(!findings.more_downward_than_upward);
    }
    SUBCASE("uniform matrix fails strict dominance") {
        const double u = 1.0 / 9.0;
        matrix.fractions = {{u, u, u}, {u, u, u}, {u, u, u}};
        auto findings = flow_findings(matrix);
        CHECK(!findings.all_diagonal_dominant);
        for (bool row : findings.diagonal_dominant) CHECK(!row);
    }
    SUBCASE("downward versus upward mass") {
        matrix.fractions = {{0.3, 0.2, 0.1}, {0.05, 0.2, 0.0}, {0.05, 0.0, 0.1}};
        auto findings = flow_findings(matrix);
        CHECK(findings.top_division_downward == doctest::Approx(0.3));
        CHECK(findings.top_division_upward == doctest::Approx(0.10));
        CHECK(findings.more_downward_than_upward);
    }
}

TEST_CASE("football groups FBS and FCS as the top tier") {
    FlowMatrix matrix;
    matrix.sport = Sport::Football;
    matrix.divisions = {Division::FBS, Division::FCS, Division::DivII, Division::DivIII};
    matrix.fractions = {{0.1, 0.1, 0.05, 0.05}, // FBS->II/III: 0.10
                        {0.1, 0.1, 0.03, 0.02}, // FCS->II/III: 0.05
                        {0.01, 0.02, 0.1, 0.0},
                        {0.03, 0.04, 0.0, 0.25}};
    auto findings = flow_findings(matrix);
    CHECK(findings.top_division_downward == doctest::Approx(0.15));
    CHECK(findings.top_division_upward == doctest::Approx(0.10));
    CHECK(findings.more_downward_than_upward);
}
