#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "hirenet/network.hpp"

namespace testutil {

// Scratch directory removed on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static std::atomic<unsigned> counter{0};
        auto base = std::filesystem::temp_directory_path();
        path = base / ("hirenet_test_" + std::to_string(::getpid()) + "_" +
                       std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }

    std::string file(const std::string& name, const std::string& content) const {
        auto full = path / name;
        std::ofstream out(full, std::ios::binary);
        out << content;
        out.close();
        return full.string();
    }
};

inline std::string node_name(std::uint32_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "n%02u", i);
    return buf;
}

// Network from bare (src, dst) index pairs; one synthetic coach per edge.
inline hirenet::HiringNetwork make_network(const std::vector<std::pair<int, int>>& edges,
                                           hirenet::Sport sport = hirenet::Sport::Football) {
    std::vector<hirenet::RawHire> hires;
    int coach = 0;
    for (auto [s, d] : edges) {
        hires.push_back({node_name(static_cast<std::uint32_t>(s)), node_name(static_cast<std::uint32_t>(d)),
                         "c" + std::to_string(coach++), 2000, 2000, 1});
    }
    return hirenet::HiringNetwork::from_edges(sport, std::move(hires));
}

// Random weakly connected multigraph on n nodes: a random spanning tree with
// random edge directions plus `extra` random edges (parallel edges and
// self-loops allowed).
inline hirenet::HiringNetwork random_digraph(std::mt19937& rng, int n, int extra,
                                             bool allow_self_loops = true) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        int a = order[i];
        int b = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
        if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::uniform_int_distribution<int> node(0, n - 1);
    for (int e = 0; e < extra; ++e) {
        int a = node(rng);
        int b = node(rng);
        if (!allow_self_loops && a == b) b = (b + 1) % n;
        edges.emplace_back(a, b);
    }
    return make_network(edges);
}

} // namespace testutil
