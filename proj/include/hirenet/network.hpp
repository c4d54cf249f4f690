#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hirenet/types.hpp"

namespace hirenet {

// One hire: a directed edge from the coach's alma mater to the employer.
struct HiringEdge {
    std::uint32_t src = 0; // alma mater node index
    std::uint32_t dst = 0; // employer node index
    std::string coach_id;
    int grad_year = 0;
    int hire_year = 0;    // stint start year
    int tenure_years = 0; // end - start + 1, >= 1
};

// Same edge with endpoints still as school ids; used for construction and
// for the edge-list checkpoint format.
struct RawHire {
    std::string src;
    std::string dst;
    std::string coach_id;
    int grad_year = 0;
    int hire_year = 0;
    int tenure_years = 0;
};

// Immutable directed multigraph of hires. Nodes are school ids held in
// sorted order; parallel edges and self-loops are preserved. Edges are kept
// in a canonical order so that two networks built from the same edge
// multiset compare equal field by field.
class HiringNetwork {
  public:
    HiringNetwork() = default;

    // `extra_nodes` admits schools with no incident hires (isolated nodes).
    // School attributes are attached from `schools` when present; absent
    // schools get Unknown divisions and no coordinates.
    static HiringNetwork from_edges(Sport sport, std::vector<RawHire> hires,
                                    const SchoolTable& schools = {},
                                    const std::vector<std::string>& extra_nodes = {});

    Sport sport() const { return sport_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& node_ids() const { return nodes_; }
    const std::vector<SchoolInfo>& node_info() const { return info_; }
    const std::vector<HiringEdge>& edges() const { return edges_; }

    std::optional<std::uint32_t> index_of(std::string_view school) const;
    const std::string& id_of(std::uint32_t index) const { return nodes_.at(index); }

  private:
    Sport sport_ = Sport::Football;
    std::vector<std::string> nodes_; // sorted school ids
    std::vector<SchoolInfo> info_;   // aligned with nodes_
    std::vector<HiringEdge> edges_;  // sorted by (src, dst, coach_id, hire_year, grad_year, tenure)
};

struct NetworkSummary {
    std::size_t n_schools = 0;
    std::size_t n_coaches = 0;
    std::size_t n_edges = 0;
    double mean_degree = 0;        // edges per school, each edge counted once
    double self_loop_fraction = 0; // coaches with at least one stint at their alma mater
    double mean_hiring_years = 0;  // mean tenure over edges
    int min_grad_year = 0;
    int max_grad_year = 0;
};

// One edge per (coach, stint); the node set is the union of alma maters and
// employers.
HiringNetwork build_network(const std::vector<CoachRecord>& records, const SchoolTable& schools,
                            Sport sport);

// Throws DataError on an empty network.
NetworkSummary summarize(const HiringNetwork& network);

// Parallel edges count individually; a self-loop adds one to both the out-
// and the in-degree of its node.
std::pair<std::map<std::string, std::size_t>, std::map<std::string, std::size_t>>
degree_sequences(const HiringNetwork& network);

std::vector<std::size_t> out_degree_vector(const HiringNetwork& network);
std::vector<std::size_t> in_degree_vector(const HiringNetwork& network);

// Canonical edge-list checkpoint, header
// `src,dst,coach_id,grad_year,hire_year,tenure_years`.
std::string edge_list_csv(const HiringNetwork& network);
void write_edge_list(const HiringNetwork& network, const std::string& path);
HiringNetwork read_edge_list(const std::string& path, Sport sport, const SchoolTable& schools = {});

} // namespace hirenet
