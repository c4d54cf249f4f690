#include <doctest.h>

#include <fstream>
#include <random>
#include <set>

#include "hirenet/community.hpp"
#include "hirenet/errors.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace hirenet;

namespace {

// Two directed triangles, disjoint.
HiringNetwork two_triangles() {
    return testutil::make_network({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

std::map<std::string, int> labels_to_assignment(const HiringNetwork& net,
                                                const std::vector<int>& labels) {
    std::map<std::string, int> assignment;
    for (std::uint32_t i = 0; i < net.node_count(); ++i) assignment[net.id_of(i)] = labels[i];
    return assignment;
}

} // namespace

TEST_CASE("modularity of the all-in-one partition is zero on loop-free graphs") {
    auto net = testutil::make_network({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    CHECK(modularity(net, labels_to_assignment(net, {0, 0, 0, 0})) == doctest::Approx(0.0));
}

TEST_CASE("two disjoint triangles split naturally at Q = 0.5") {
    auto net = two_triangles();
    CHECK(modularity(net, labels_to_assignment(net, {0, 0, 0, 1, 1, 1})) == doctest::Approx(0.5));
}

TEST_CASE("singleton partition has negative modularity on loop-free graphs") {
    auto net = testutil::make_network({{0, 1}, {1, 2}});
    CHECK(modularity(net, labels_to_assignment(net, {0, 1, 2})) < 0.0);
}

TEST_CASE("modularity requires a full assignment") {
    auto net = testutil::make_network({{0, 1}});
    std::map<std::string, int> partial{{testutil::node_name(0), 0}};
    CHECK_THROWS_AS(modularity(net, partial), DataError);
}

TEST_CASE("modularity is invariant under label renaming") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto net = testutil::random_digraph(rng, 6, 8);
        std::vector<int> labels(net.node_count());
        for (int& l : labels) l = std::uniform_int_distribution<int>(0, 2)(rng);
        std::vector<int> renamed(labels);
        for (int& l : renamed) l = 10 - l * 3; // arbitrary relabeling, still injective
        CHECK(modularity(net, labels_to_assignment(net, labels)) ==
              doctest::Approx(modularity(net, labels_to_assignment(net, renamed))));
    }
}

TEST_CASE("modularity agrees with the dense-matrix oracle") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        auto net = testutil::random_digraph(rng, 2 + trial % 7, 10);
        std::vector<int> labels(net.node_count());
        for (int& l : labels) l = std::uniform_int_distribution<int>(0, 3)(rng);
        CHECK(modularity(net, labels_to_assignment(net, labels)) ==
              doctest::Approx(oracle::modularity_dense(net, labels)).epsilon(1e-12));
    }
}

TEST_CASE("louvain on two disjoint triangles") {
    auto net = two_triangles();
    auto partition = louvain(net, 42);
    CHECK(partition.modularity == doctest::Approx(0.5));
    auto report = community_report(partition);
    CHECK(report.n_communities == 2);
    CHECK(report.sizes == std::vector<std::size_t>{3, 3});
}

TEST_CASE("louvain merges a complete graph into one community") {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) edges.emplace_back(a, b);
    }
    auto partition = louvain(testutil::make_network(edges), 7);
    CHECK(community_report(partition).n_communities == 1);
    CHECK(partition.modularity == doctest::Approx(0.0));
}

TEST_CASE("louvain rejects an edgeless network") {
    auto net = HiringNetwork::from_edges(Sport::Football, {}, {}, {"a", "b"});
    CHECK_THROWS_AS(louvain(net, 1), DataError);
}

TEST_CASE("louvain's reported Q matches an independent recomputation") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 25; ++trial) {
        auto net = testutil::random_digraph(rng, 3 + trial % 6, 12);
        auto partition = louvain(net, 1000 + trial);
        std::vector<int> labels(net.node_count());
        for (std::uint32_t i = 0; i < net.node_count(); ++i) {
            labels[i] = partition.assignment.at(net.id_of(i));
        }
        CHECK(std::abs(partition.modularity - oracle::modularity_dense(net, labels)) < 1e-9);
    }
}

TEST_CASE("louvain level trace never decreases") {
    std::mt19937 rng(66);
    for (int trial = 0; trial < 15; ++trial) {
        auto net = testutil::random_digraph(rng, 8, 20);
        std::vector<double> levels;
        louvain(net, trial, &levels);
        REQUIRE(!levels.empty());
        for (std::size_t i = 1; i < levels.size(); ++i) CHECK(levels[i] >= levels[i - 1] - 1e-12);
    }
}

TEST_CASE("louvain reaches at least 95% of the exhaustive optimum on small graphs") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        auto net = testutil::random_digraph(rng, 2 + trial % 7, 6);
        auto partition = louvain(net, 3000 + trial);
        const double best = oracle::best_modularity_exhaustive(net);
        CHECK(partition.modularity >= 0.95 * best - 1e-12);
    }
}

TEST_CASE("community labels are dense and size-ordered") {
    auto net = two_triangles();
    auto partition = louvain(net, 9);
    std::set<int> labels;
    for (const auto& [school, label] : partition.assignment) labels.insert(label);
    CHECK(labels == std::set<int>{0, 1});
}

TEST_CASE("community report coverage") {
    Partition p;
    for (int i = 0; i < 10; ++i) p.assignment["s" + std::to_string(i)] = 0;
    CHECK(community_report(p).top6_coverage == doctest::Approx(1.0));

    Partition q;
    int node = 0;
    const std::vector<std::size_t> sizes{40, 30, 10, 8, 5, 5, 2};
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (std::size_t i = 0; i < sizes[c]; ++i) {
            q.assignment["s" + std::to_string(node++)] = static_cast<int>(c);
        }
    }
    auto report = community_report(q);
    CHECK(report.n_communities == 7);
    CHECK(report.sizes == sizes);
    CHECK(report.top6_coverage == doctest::Approx(0.98));
}

TEST_CASE("geo export writes attributes and skips nodes without coordinates") {
    SchoolTable schools;
    for (int i = 0; i < 3; ++i) {
        SchoolInfo info;
        info.school = testutil::node_name(i);
        info.display_name = "School " + std::to_string(i);
        if (i != 2) { // node 2 stays coordinate-less
            info.latitude = 40.0 + i;
            info.longitude = -70.0 - i;
        }
        schools.emplace(info.school, info);
    }
    std::vector<RawHire> hires{{testutil::node_name(0), testutil::node_name(1), "c0", 2000, 2000, 1},
                               {testutil::node_name(1), testutil::node_name(2), "c1", 2000, 2000, 1}};
    auto net = HiringNetwork::from_edges(Sport::Football, hires, schools);

    Partition partition;
    partition.assignment[testutil::node_name(0)] = 0;
    partition.assignment[testutil::node_name(1)] = 0;
    partition.assignment[testutil::node_name(2)] = 1;

    auto exported = make_geo_export(net, partition);
    CHECK(exported.skipped_nodes == 1);
    CHECK(exported.graphml.find("<node id=\"n00\">") != std::string::npos);
    CHECK(exported.graphml.find("<node id=\"n02\">") == std::string::npos);
    CHECK(exported.graphml.find("<data key=\"size\">2</data>") != std::string::npos); // out-degree 1
    CHECK(exported.graphml.find("<data key=\"x\">-70</data>") != std::string::npos);
    CHECK(exported.dot.find("\"n00\"") != std::string::npos);

    testutil::TempDir dir;
    auto path = (dir.path / "net.graphml").string();
    CHECK(export_geo(net, partition, path) == 1);
    std::ifstream check(path);
    CHECK(check.good());
}

TEST_CASE("geo export colors cap at six") {
    SchoolTable schools;
    std::vector<RawHire> hires;
    Partition partition;
    for (int i = 0; i < 8; ++i) {
        SchoolInfo info;
        info.school = testutil::node_name(i);
        info.display_name = info.school;
        info.latitude = 30.0 + i;
        info.longitude = -80.0 + i;
        schools.emplace(info.school, info);
        partition.assignment[info.school] = i; // eight singleton communities
        hires.push_back({testutil::node_name(i), testutil::node_name((i + 1) % 8),
                         "c" + std::to_string(i), 2000, 2000, 1});
    }
    auto net = HiringNetwork::from_edges(Sport::Football, hires, schools);
    auto exported = make_geo_export(net, partition);
    for (int color = 0; color <= 6; ++color) {
        CHECK(exported.graphml.find("<data key=\"color\">" + std::to_string(color) + "</data>") !=
              std::string::npos);
    }
    CHECK(exported.graphml.find("<data key=\"color\">7</data>") == std::string::npos);
}
