#include "hirenet/community.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "hirenet/csv.hpp"
#include "hirenet/errors.hpp"
#include "hirenet/manifest.hpp"

namespace hirenet {

namespace {

// Symmetrized weighted view of the hiring multigraph: A = W + W^T with W
// the directed weight matrix (parallel edges collapsed). The diagonal is
// stored apart from the neighbor lists; degrees include it.
struct SymGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj; // off-diagonal, both directions
    std::vector<double> self;   // A_ii
    std::vector<double> degree; // row sums of A
    double total = 0;           // 2m
};

SymGraph symmetrize(const HiringNetwork& network) {
    SymGraph g;
    g.n = network.node_count();
    std::unordered_map<std::uint64_t, double> weights;
    std::vector<double> self(g.n, 0.0);
    for (const HiringEdge& e : network.edges()) {
        if (e.src == e.dst) {
            self[e.src] += 2.0; // both orientations of the loop
        } else {
            std::uint32_t a = std::min(e.src, e.dst), b = std::max(e.src, e.dst);
            weights[(static_cast<std::uint64_t>(a) << 32) | b] += 1.0;
        }
    }
    g.adj.resize(g.n);
    g.self = std::move(self);
    for (const auto& [key, w] : weights) {
        auto a = static_cast<std::uint32_t>(key >> 32);
        auto b = static_cast<std::uint32_t>(key & 0xffffffffu);
        g.adj[a].emplace_back(b, w);
        g.adj[b].emplace_back(a, w);
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    g.degree.assign(g.n, 0.0);
    for (std::size_t i = 0; i < g.n; ++i) {
        g.degree[i] = g.self[i];
        for (const auto& [j, w] : g.adj[i]) g.degree[i] += w;
        g.total += g.degree[i];
    }
    return g;
}

double partition_q(const SymGraph& g, const std::vector<int>& comm) {
    int n_comm = 0;
    for (int c : comm) n_comm = std::max(n_comm, c + 1);
    std::vector<double> internal(n_comm, 0.0), tot(n_comm, 0.0);
    for (std::size_t i = 0; i < g.n; ++i) {
        tot[comm[i]] += g.degree[i];
        internal[comm[i]] += g.self[i];
        for (const auto& [j, w] : g.adj[i]) {
            if (comm[i] == comm[j]) internal[comm[i]] += w;
        }
    }
    double q = 0;
    for (int c = 0; c < n_comm; ++c) {
        q += internal[c] / g.total - (tot[c] / g.total) * (tot[c] / g.total);
    }
    return q;
}

constexpr double kGainTolerance = 1e-7;

// One local-moving phase; comm is updated in place. Returns true when at
// least one node changed community.
bool one_level(const SymGraph& g, std::vector<int>& comm, std::mt19937& rng) {
    const double m2 = g.total; // 2m
    std::vector<double> tot(g.n, 0.0), internal(g.n, 0.0);
    for (std::size_t i = 0; i < g.n; ++i) {
        tot[comm[i]] += g.degree[i];
        internal[comm[i]] += g.self[i];
        for (const auto& [j, w] : g.adj[i]) {
            if (comm[i] == comm[j]) internal[comm[i]] += w;
        }
    }

    std::vector<std::size_t> order(g.n);
    std::iota(order.begin(), order.end(), 0);

    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t idx : order) {
            const auto i = static_cast<std::uint32_t>(idx);
            const int c_old = comm[i];
            const double k_i = g.degree[i];

            // Weight from i into each neighboring community.
            std::map<int, double> links; // ordered for deterministic tie-breaks
            links[c_old]; // ensure the old community is a candidate
            for (const auto& [j, w] : g.adj[i]) links[comm[j]] += w;

            // Detach i.
            tot[c_old] -= k_i;
            internal[c_old] -= 2.0 * links[c_old] + g.self[i];

            auto gain_of = [&](int c) {
                return links[c] / (m2 / 2.0) - tot[c] * k_i / ((m2 / 2.0) * m2);
            };
            int best_c = c_old;
            double best_gain = gain_of(c_old);
            for (const auto& [c, w] : links) {
                if (c == c_old) continue;
                double gain = gain_of(c);
                if (gain > best_gain + kGainTolerance) {
                    best_gain = gain;
                    best_c = c;
                }
            }

            tot[best_c] += k_i;
            internal[best_c] += 2.0 * links[best_c] + g.self[i];
            comm[i] = best_c;
            if (best_c != c_old) {
                moved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

// Renumber labels to 0..k-1 in ascending label order.
int compact_labels(std::vector<int>& comm) {
    std::map<int, int> remap;
    for (int c : comm) remap.emplace(c, 0);
    int next = 0;
    for (auto& [old_label, new_label] : remap) new_label = next++;
    for (int& c : comm) c = remap[c];
    return next;
}

SymGraph aggregate(const SymGraph& g, const std::vector<int>& comm, int n_comm) {
    SymGraph out;
    out.n = static_cast<std::size_t>(n_comm);
    out.adj.resize(out.n);
    out.self.assign(out.n, 0.0);
    std::map<std::pair<int, int>, double> cross;
    for (std::size_t i = 0; i < g.n; ++i) {
        out.self[comm[i]] += g.self[i];
        for (const auto& [j, w] : g.adj[i]) {
            if (comm[i] == comm[j]) {
                out.self[comm[i]] += w; // both directions visit once each
            } else if (comm[i] < comm[j]) {
                cross[{comm[i], comm[j]}] += w;
            }
        }
    }
    for (const auto& [cd, w] : cross) {
        out.adj[cd.first].emplace_back(static_cast<std::uint32_t>(cd.second), w);
        out.adj[cd.second].emplace_back(static_cast<std::uint32_t>(cd.first), w);
    }
    out.degree.assign(out.n, 0.0);
    for (std::size_t i = 0; i < out.n; ++i) {
        out.degree[i] = out.self[i];
        for (const auto& [j, w] : out.adj[i]) out.degree[i] += w;
        out.total += out.degree[i];
    }
    return out;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c; break;
        }
    }
    return out;
}

const char* kDotPalette[7] = {"#7b4fa6", "#d95f02", "#1b9e77", "#e7298a",
                              "#66a61e", "#e6ab02", "#666666"};

} // namespace

double modularity(const HiringNetwork& network, const std::map<std::string, int>& assignment) {
    SymGraph g = symmetrize(network);
    if (!(g.total > 0)) throw DataError("modularity: network has no edges");
    std::vector<int> comm(g.n, -1);
    for (std::uint32_t i = 0; i < g.n; ++i) {
        auto it = assignment.find(network.id_of(i));
        if (it == assignment.end()) {
            throw DataError("modularity: node '" + network.id_of(i) + "' missing from assignment");
        }
        if (it->second < 0) throw DataError("modularity: negative community label");
        comm[i] = it->second;
    }
    return partition_q(g, comm);
}

Partition louvain(const HiringNetwork& network, std::uint32_t seed,
                  std::vector<double>* level_modularity) {
    if (network.edge_count() == 0) throw DataError("louvain: network has no edges");
    SymGraph g = symmetrize(network);
    std::mt19937 rng(seed);

    // node -> community, composed across aggregation levels
    std::vector<int> membership(g.n);
    std::iota(membership.begin(), membership.end(), 0);

    if (level_modularity) level_modularity->clear();
    while (true) {
        std::vector<int> comm(g.n);
        std::iota(comm.begin(), comm.end(), 0);
        const bool improved = one_level(g, comm, rng);
        const int n_comm = compact_labels(comm);
        for (int& c : membership) c = comm[c];
        if (level_modularity) level_modularity->push_back(partition_q(g, comm));
        if (!improved || static_cast<std::size_t>(n_comm) == g.n) break;
        g = aggregate(g, comm, n_comm);
    }

    // Relabel by community size, largest first; ties by smallest member index.
    std::map<int, std::pair<std::size_t, std::size_t>> stats; // label -> (size, first member)
    for (std::size_t i = 0; i < membership.size(); ++i) {
        auto [it, inserted] = stats.try_emplace(membership[i], std::pair<std::size_t, std::size_t>{0, i});
        ++it->second.first;
        (void)inserted;
    }
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> ordered(stats.begin(), stats.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.second.first != b.second.first) return a.second.first > b.second.first;
        return a.second.second < b.second.second;
    });
    std::map<int, int> relabel;
    for (std::size_t rank = 0; rank < ordered.size(); ++rank) relabel[ordered[rank].first] = static_cast<int>(rank);

    Partition partition;
    for (std::uint32_t i = 0; i < network.node_count(); ++i) {
        partition.assignment[network.id_of(i)] = relabel[membership[i]];
    }
    partition.modularity = modularity(network, partition.assignment);
    return partition;
}

CommunityReport community_report(const Partition& partition) {
    std::map<int, std::size_t> sizes;
    for (const auto& [school, label] : partition.assignment) ++sizes[label];

    CommunityReport report;
    report.n_communities = sizes.size();
    for (const auto& [label, size] : sizes) report.sizes.push_back(size);
    std::sort(report.sizes.begin(), report.sizes.end(), std::greater<>());
    const std::size_t n = partition.assignment.size();
    std::size_t top6 = 0;
    for (std::size_t i = 0; i < report.sizes.size() && i < 6; ++i) top6 += report.sizes[i];
    report.top6_coverage = n == 0 ? 0.0 : static_cast<double>(top6) / static_cast<double>(n);
    report.modularity = partition.modularity;
    return report;
}

GeoExport make_geo_export(const HiringNetwork& network, const Partition& partition) {
    const auto out_deg = out_degree_vector(network);
    const std::size_t n = network.node_count();

    std::vector<bool> keep(n, false);
    std::vector<int> color(n, 6);
    GeoExport result;
    for (std::uint32_t i = 0; i < n; ++i) {
        const SchoolInfo& info = network.node_info()[i];
        if (!info.has_coordinates()) {
            ++result.skipped_nodes;
            continue;
        }
        keep[i] = true;
        auto it = partition.assignment.find(network.id_of(i));
        if (it == partition.assignment.end()) {
            throw DataError("export_geo: node '" + network.id_of(i) + "' missing from partition");
        }
        color[i] = std::min(it->second, 6);
    }

    // Collapse parallel edges between kept nodes.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> edge_weight;
    for (const HiringEdge& e : network.edges()) {
        if (keep[e.src] && keep[e.dst]) ++edge_weight[{e.src, e.dst}];
    }

    std::ostringstream gml;
    gml << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"x\" for=\"node\" attr.name=\"x\" attr.type=\"double\"/>\n"
        << "  <key id=\"y\" for=\"node\" attr.name=\"y\" attr.type=\"double\"/>\n"
        << "  <key id=\"size\" for=\"node\" attr.name=\"size\" attr.type=\"double\"/>\n"
        << "  <key id=\"color\" for=\"node\" attr.name=\"color\" attr.type=\"int\"/>\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
        << "  <graph id=\"hiring\" edgedefault=\"directed\">\n";
    std::ostringstream dot;
    dot << "digraph hiring {\n  node [shape=circle, style=filled];\n";

    for (std::uint32_t i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        const SchoolInfo& info = network.node_info()[i];
        const std::string id = xml_escape(network.id_of(i));
        const double size = 1.0 + static_cast<double>(out_deg[i]);
        gml << "    <node id=\"" << id << "\">"
            << "<data key=\"x\">" << format_number(*info.longitude) << "</data>"
            << "<data key=\"y\">" << format_number(*info.latitude) << "</data>"
            << "<data key=\"size\">" << format_number(size) << "</data>"
            << "<data key=\"color\">" << color[i] << "</data>"
            << "<data key=\"label\">" << xml_escape(info.display_name) << "</data>"
            << "</node>\n";
        dot << "  \"" << network.id_of(i) << "\" [pos=\"" << format_number(*info.longitude) << ','
            << format_number(*info.latitude) << "!\", size=" << format_number(size)
            << ", color=" << color[i] << ", fillcolor=\"" << kDotPalette[color[i]] << "\"];\n";
    }
    for (const auto& [key, weight] : edge_weight) {
        gml << "    <edge source=\"" << xml_escape(network.id_of(key.first)) << "\" target=\""
            << xml_escape(network.id_of(key.second)) << "\"><data key=\"weight\">" << weight
            << "</data></edge>\n";
        dot << "  \"" << network.id_of(key.first) << "\" -> \"" << network.id_of(key.second)
            << "\" [weight=" << weight << "];\n";
    }
    gml << "  </graph>\n</graphml>\n";
    dot << "}\n";

    result.graphml = gml.str();
    result.dot = dot.str();
    return result;
}

std::size_t export_geo(const HiringNetwork& network, const Partition& partition,
                       const std::string& path) {
    GeoExport exported = make_geo_export(network, partition);
    write_file_atomic(path, exported.graphml);
    return exported.skipped_nodes;
}

std::size_t export_geo_dot(const HiringNetwork& network, const Partition& partition,
                           const std::string& path) {
    GeoExport exported = make_geo_export(network, partition);
    write_file_atomic(path, exported.dot);
    return exported.skipped_nodes;
}

} // namespace hirenet
