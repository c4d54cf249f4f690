#include "hirenet/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hirenet/errors.hpp"

namespace hirenet {

namespace {

// Reversed, weight-collapsed view used by the walk-based rankings:
// employer -> alma mater, parallel hires as integer weights.
struct ReversedGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> in_edges; // per target: (source, weight)
    std::vector<double> out_weight;
};

ReversedGraph reversed_graph(const HiringNetwork& network) {
    ReversedGraph g;
    g.n = network.node_count();
    g.in_edges.resize(g.n);
    g.out_weight.assign(g.n, 0.0);
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> weights;
    for (const HiringEdge& e : network.edges()) {
        weights[{e.dst, e.src}] += 1.0; // reversed
    }
    for (const auto& [edge, w] : weights) {
        g.in_edges[edge.second].emplace_back(edge.first, w);
        g.out_weight[edge.first] += w;
    }
    return g;
}

std::uint32_t pick_position(std::mt19937& rng, std::size_t n) {
    return std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(n - 1))(rng);
}

} // namespace

std::string_view to_string(RankMethod method) {
    switch (method) {
    case RankMethod::OutDegree: return "outdegree";
    case RankMethod::MVR: return "mvr";
    case RankMethod::PageRank: return "pagerank";
    case RankMethod::LeaderRank: return "leaderrank";
    case RankMethod::Aggregated: break;
    }
    return "aggregated";
}

Ranking make_ranking(RankMethod method, std::vector<std::pair<std::string, double>> scores) {
    std::sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    Ranking ranking;
    ranking.method = method;
    ranking.entries.reserve(scores.size());
    int rank = 1;
    for (auto& [school, score] : scores) {
        ranking.entries.push_back({std::move(school), score, rank++});
    }
    return ranking;
}

Ranking outdegree_ranking(const HiringNetwork& network) {
    if (network.node_count() == 0) throw DataError("outdegree_ranking: empty network");
    auto out_deg = out_degree_vector(network);
    std::vector<std::pair<std::string, double>> scores;
    scores.reserve(out_deg.size());
    for (std::uint32_t i = 0; i < network.node_count(); ++i) {
        scores.emplace_back(network.id_of(i), static_cast<double>(out_deg[i]));
    }
    return make_ranking(RankMethod::OutDegree, std::move(scores));
}

std::size_t violations(const HiringNetwork& network, const std::vector<std::string>& permutation) {
    if (permutation.size() != network.node_count()) {
        throw std::invalid_argument("violations: permutation size differs from node count");
    }
    std::vector<std::size_t> position(network.node_count(), network.node_count());
    std::vector<bool> seen(network.node_count(), false);
    for (std::size_t p = 0; p < permutation.size(); ++p) {
        auto idx = network.index_of(permutation[p]);
        if (!idx || seen[*idx]) {
            throw std::invalid_argument("violations: permutation is not a bijection over nodes");
        }
        seen[*idx] = true;
        position[*idx] = p;
    }
    std::size_t count = 0;
    for (const HiringEdge& e : network.edges()) {
        if (e.src == e.dst) continue;
        if (position[e.dst] < position[e.src]) ++count;
    }
    return count;
}

namespace {

// Violation count over edges incident to nodes a or b under `pos`,
// counting each qualifying edge once. Only these edges can change when a
// and b swap positions.
std::size_t local_violations(const std::vector<std::vector<std::uint32_t>>& incident,
                             const std::vector<HiringEdge>& edges, const std::vector<std::size_t>& pos,
                             std::uint32_t a, std::uint32_t b) {
    std::size_t count = 0;
    for (std::uint32_t ei : incident[a]) {
        const HiringEdge& e = edges[ei];
        if (pos[e.dst] < pos[e.src]) ++count;
    }
    for (std::uint32_t ei : incident[b]) {
        const HiringEdge& e = edges[ei];
        if (e.src == a || e.dst == a) continue; // already counted from a's list
        if (pos[e.dst] < pos[e.src]) ++count;
    }
    return count;
}

} // namespace

MVRResult mvr(const HiringNetwork& network, std::uint32_t seed, int restarts, int steps) {
    const std::size_t n = network.node_count();
    if (n == 0) throw DataError("mvr: empty network");
    if (restarts < 1 || steps < 0) throw std::invalid_argument("mvr: bad search budget");

    const auto& edges = network.edges();
    std::vector<std::vector<std::uint32_t>> incident(n); // non-loop edges per node
    for (std::uint32_t ei = 0; ei < edges.size(); ++ei) {
        if (edges[ei].src == edges[ei].dst) continue;
        incident[edges[ei].src].push_back(ei);
        incident[edges[ei].dst].push_back(ei);
    }

    auto full_violations = [&](const std::vector<std::size_t>& pos) {
        std::size_t count = 0;
        for (const HiringEdge& e : edges) {
            if (e.src == e.dst) continue;
            if (pos[e.dst] < pos[e.src]) ++count;
        }
        return count;
    };

    // Out-degree order seeds restart 0.
    Ranking by_outdegree = outdegree_ranking(network);
    std::vector<std::uint32_t> outdegree_order;
    outdegree_order.reserve(n);
    for (const auto& entry : by_outdegree.entries) {
        outdegree_order.push_back(*network.index_of(entry.school));
    }

    std::vector<std::uint32_t> best_order;
    std::size_t best_violations = 0;
    bool have_best = false;
    int restarts_used = 0;

    for (int restart = 0; restart < restarts; ++restart) {
        ++restarts_used;
        std::mt19937 rng(seed + 0x9e3779b9u * static_cast<std::uint32_t>(restart));

        std::vector<std::uint32_t> order;
        if (restart == 0) {
            order = outdegree_order;
        } else {
            order.resize(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
        }
        std::vector<std::size_t> pos(n);
        for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;
        std::size_t current = full_violations(pos);

        if (n >= 2) {
            for (int step = 0; step < steps && current > 0; ++step) {
                std::uint32_t pi = pick_position(rng, n);
                std::uint32_t pj = pick_position(rng, n);
                if (pi == pj) continue;
                std::uint32_t a = order[pi], b = order[pj];
                const std::size_t before = local_violations(incident, edges, pos, a, b);
                std::swap(pos[a], pos[b]);
                const std::size_t after = local_violations(incident, edges, pos, a, b);
                if (after <= before) {
                    std::swap(order[pi], order[pj]);
                    current = current - before + after;
                } else {
                    std::swap(pos[a], pos[b]); // revert
                }
            }
        }

        if (!have_best || current < best_violations) {
            have_best = true;
            best_violations = current;
            best_order = order;
        }
        if (best_violations == 0) break; // cannot improve on zero
    }

    MVRResult result;
    result.permutation.reserve(n);
    for (std::uint32_t idx : best_order) result.permutation.push_back(network.id_of(idx));
    result.violations = best_violations;
    result.restarts_used = restarts_used;
    return result;
}

Ranking mvr_ranking(const MVRResult& result) {
    Ranking ranking;
    ranking.method = RankMethod::MVR;
    const std::size_t n = result.permutation.size();
    ranking.entries.reserve(n);
    for (std::size_t p = 0; p < n; ++p) {
        ranking.entries.push_back(
            {result.permutation[p], static_cast<double>(n - p), static_cast<int>(p + 1)});
    }
    return ranking;
}

Ranking pagerank(const HiringNetwork& network, double damping, double tolerance) {
    const std::size_t n = network.node_count();
    if (n == 0) throw DataError("pagerank: empty network");
    if (!(damping > 0) || !(damping < 1)) throw std::invalid_argument("pagerank: damping outside (0,1)");
    if (!(tolerance > 0)) throw std::invalid_argument("pagerank: non-positive tolerance");

    ReversedGraph g = reversed_graph(network);
    std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n, 0.0);

    constexpr int kMaxIterations = 10000;
    double residual = 0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        double dangling = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (g.out_weight[j] == 0) dangling += x[j];
        }
        const double base = (1.0 - damping) / static_cast<double>(n) +
                            damping * dangling / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            double inflow = 0;
            for (const auto& [j, w] : g.in_edges[i]) inflow += x[j] * w / g.out_weight[j];
            next[i] = base + damping * inflow;
        }
        double sum = std::accumulate(next.begin(), next.end(), 0.0);
        for (double& v : next) v /= sum;

        residual = 0;
        for (std::size_t i = 0; i < n; ++i) residual += std::abs(next[i] - x[i]);
        x.swap(next);
        if (residual < tolerance) {
            std::vector<std::pair<std::string, double>> scores;
            scores.reserve(n);
            for (std::uint32_t i = 0; i < n; ++i) scores.emplace_back(network.id_of(i), x[i]);
            return make_ranking(RankMethod::PageRank, std::move(scores));
        }
    }
    throw DataError("pagerank: no convergence after 10000 iterations, residual " +
                    std::to_string(residual));
}

Ranking leaderrank(const HiringNetwork& network, double tolerance) {
    const std::size_t n = network.node_count();
    if (n == 0) throw DataError("leaderrank: empty network");
    if (!(tolerance > 0)) throw std::invalid_argument("leaderrank: non-positive tolerance");
    if (n == 1) {
        // The ground-node walk is periodic for a single school; its
        // normalized score is 1 regardless.
        Ranking ranking;
        ranking.method = RankMethod::LeaderRank;
        ranking.entries.push_back({network.id_of(0), 1.0, 1});
        return ranking;
    }

    ReversedGraph g = reversed_graph(network);
    const std::size_t ground = n;
    // Ground node links both ways to every school with weight 1.
    std::vector<double> out_weight = g.out_weight;
    for (double& w : out_weight) w += 1.0;
    const double ground_out = static_cast<double>(n);

    std::vector<double> s(n + 1, 1.0), next(n + 1, 0.0);
    s[ground] = 0.0;

    constexpr int kMaxIterations = 10000;
    double residual = 0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        double to_ground = 0;
        for (std::size_t j = 0; j < n; ++j) to_ground += s[j] / out_weight[j];
        for (std::size_t i = 0; i < n; ++i) {
            double inflow = s[ground] / ground_out;
            for (const auto& [j, w] : g.in_edges[i]) inflow += s[j] * w / out_weight[j];
            next[i] = inflow;
        }
        next[ground] = to_ground;

        residual = 0;
        for (std::size_t i = 0; i <= n; ++i) residual += std::abs(next[i] - s[i]);
        s.swap(next);
        if (residual < tolerance) {
            const double share = s[ground] / static_cast<double>(n);
            std::vector<std::pair<std::string, double>> scores;
            scores.reserve(n);
            double total = 0;
            for (std::size_t i = 0; i < n; ++i) total += s[i] + share;
            for (std::uint32_t i = 0; i < n; ++i) {
                scores.emplace_back(network.id_of(i), (s[i] + share) / total);
            }
            return make_ranking(RankMethod::LeaderRank, std::move(scores));
        }
    }
    throw DataError("leaderrank: no convergence after 10000 iterations, residual " +
                    std::to_string(residual));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("pearson: lists must have equal length >= 2");
    }
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    const double var_x = sxx - sx * sx / n;
    const double var_y = syy - sy * sy / n;
    if (!(var_x > 0) || !(var_y > 0)) throw DataError("pearson: zero variance");
    return (sxy - sx * sy / n) / std::sqrt(var_x * var_y);
}

} // namespace hirenet
