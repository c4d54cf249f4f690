#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hirenet/network.hpp"

namespace hirenet {

struct Partition {
    std::map<std::string, int> assignment; // school -> dense label, 0 = largest community
    double modularity = 0;
};

struct CommunityReport {
    std::size_t n_communities = 0;
    std::vector<std::size_t> sizes; // descending
    double top6_coverage = 0;       // nodes in the 6 largest communities / n
    double modularity = 0;
};

// Weighted undirected modularity on the symmetrized graph A = W + W^T,
// where W collapses parallel directed edges into integer weights (a
// directed self-loop therefore contributes 2 to its diagonal entry).
// Degrees are row sums of A including the diagonal. Throws DataError when
// the assignment misses a node.
double modularity(const HiringNetwork& network, const std::map<std::string, int>& assignment);

// Greedy modularity optimization: local moves in seed-shuffled node order
// alternating with graph aggregation, until no gain beyond 1e-7. Community
// labels are dense and ordered by size (ties by smallest member id). When
// `level_modularity` is given it receives Q after each aggregation level.
// Throws DataError on an edgeless network.
Partition louvain(const HiringNetwork& network, std::uint32_t seed,
                  std::vector<double>* level_modularity = nullptr);

CommunityReport community_report(const Partition& partition);

struct GeoExport {
    std::string graphml;
    std::string dot;
    std::size_t skipped_nodes = 0; // nodes without coordinates
};

// Node attributes: x = longitude, y = latitude, size = 1 + out-degree,
// color = community size rank (0..5 for the six largest, 6 otherwise).
// Parallel edges are collapsed into a weight attribute. Nodes without
// coordinates are left out together with their edges.
GeoExport make_geo_export(const HiringNetwork& network, const Partition& partition);

// Write the GraphML (or DOT) form to `path`; returns the skipped-node count.
std::size_t export_geo(const HiringNetwork& network, const Partition& partition,
                       const std::string& path);
std::size_t export_geo_dot(const HiringNetwork& network, const Partition& partition,
                           const std::string& path);

} // namespace hirenet
