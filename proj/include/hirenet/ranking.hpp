#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hirenet/network.hpp"

namespace hirenet {

enum class RankMethod { OutDegree, MVR, PageRank, LeaderRank, Aggregated };

std::string_view to_string(RankMethod method);

struct Ranking {
    struct Entry {
        std::string school;
        double score = 0;
        int rank = 0; // 1..n
    };

    RankMethod method = RankMethod::OutDegree;
    std::vector<Entry> entries; // sorted by rank
};

// Assembles a Ranking: higher score is better, ties broken by ascending
// school id, ranks assigned 1..n.
Ranking make_ranking(RankMethod method, std::vector<std::pair<std::string, double>> scores);

struct MVRResult {
    std::vector<std::string> permutation; // best school first
    std::size_t violations = 0;
    int restarts_used = 0;
};

Ranking outdegree_ranking(const HiringNetwork& network);

// Number of edges pointing "up" the ordering: hires where the employer sits
// strictly above the alma mater. Self-loops never count. The permutation
// must cover every node exactly once.
std::size_t violations(const HiringNetwork& network, const std::vector<std::string>& permutation);

// Zero-temperature pairwise-swap search with plateau moves: per restart a
// random start (restart 0 starts from the out-degree order), `steps` uniform
// position swaps accepted when violations do not increase. Best ordering
// across restarts wins, ties by restart index.
MVRResult mvr(const HiringNetwork& network, std::uint32_t seed, int restarts = 50,
              int steps = 20000);

Ranking mvr_ranking(const MVRResult& result);

// Power iteration on the reversed multigraph (employer votes for alma
// mater); parallel edges act as integer weights, dangling mass spreads
// uniformly. Scores sum to 1. Throws DataError if the L1 change is still
// above `tolerance` after 10000 iterations.
Ranking pagerank(const HiringNetwork& network, double damping = 0.85, double tolerance = 1e-12);

// Parameter-free walk on the reversed graph plus a ground node linked both
// ways to every school; the ground score is shared out equally at the end
// and scores are normalized to sum 1.
Ranking leaderrank(const HiringNetwork& network, double tolerance = 1e-12);

// Sample Pearson correlation; throws DataError on zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

} // namespace hirenet
