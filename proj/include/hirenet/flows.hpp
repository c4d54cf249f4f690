#pragma once

#include <cstddef>
#include <vector>

#include "hirenet/network.hpp"
#include "hirenet/types.hpp"

namespace hirenet {

// Division-by-division share of hires. Fractions sum to 1 over the whole
// matrix; marginals are row and column sums.
struct FlowMatrix {
    Sport sport = Sport::Football;
    std::vector<Division> divisions; // row/column labels, fixed per sport
    std::vector<std::vector<double>> fractions;
    std::vector<double> row_totals;
    std::vector<double> col_totals;
    std::size_t n_edges_used = 0;
    std::size_t n_edges_skipped = 0; // post-cutoff edges with an unlabeled endpoint
};

// Hires of coaches graduating strictly after `cutoff_year` (or at it, when
// `inclusive_cutoff`), both endpoints carrying a division from the sport's
// label set (basketball: DivI/DivII/DivIII; football: FBS/FCS/DivII/DivIII).
// Throws DataError when no edge qualifies.
FlowMatrix division_flow_matrix(const HiringNetwork& network, const SchoolTable& schools,
                                int cutoff_year = 1973, bool inclusive_cutoff = false);

struct FlowFindings {
    std::vector<bool> diagonal_dominant; // per row: diagonal strictly largest
    bool all_diagonal_dominant = false;
    double top_division_downward = 0; // mass from the top tier into DivII/DivIII
    double top_division_upward = 0;   // mass from DivII/DivIII into the top tier
    bool more_downward_than_upward = false;
};

// Descriptive report; nothing is asserted. Football's top tier groups FBS
// and FCS, basketball's is DivI.
FlowFindings flow_findings(const FlowMatrix& matrix);

} // namespace hirenet
