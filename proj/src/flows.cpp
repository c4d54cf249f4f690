#include "hirenet/flows.hpp"

#include <algorithm>

#include "hirenet/errors.hpp"

namespace hirenet {

namespace {

std::vector<Division> division_labels(Sport sport) {
    if (sport == Sport::Basketball) return {Division::DivI, Division::DivII, Division::DivIII};
    return {Division::FBS, Division::FCS, Division::DivII, Division::DivIII};
}

} // namespace

FlowMatrix division_flow_matrix(const HiringNetwork& network, const SchoolTable& schools,
                                int cutoff_year, bool inclusive_cutoff) {
    FlowMatrix matrix;
    matrix.sport = network.sport();
    matrix.divisions = division_labels(network.sport());
    const std::size_t k = matrix.divisions.size();

    auto division_index = [&](std::uint32_t node) -> int {
        const std::string& id = network.id_of(node);
        auto it = schools.find(id);
        if (it == schools.end()) return -1;
        const Division d = it->second.division_for(network.sport());
        for (std::size_t i = 0; i < k; ++i) {
            if (matrix.divisions[i] == d) return static_cast<int>(i);
        }
        return -1;
    };

    std::vector<std::vector<std::size_t>> counts(k, std::vector<std::size_t>(k, 0));
    for (const HiringEdge& e : network.edges()) {
        const bool past_cutoff = inclusive_cutoff ? e.grad_year >= cutoff_year : e.grad_year > cutoff_year;
        if (!past_cutoff) continue;
        const int r = division_index(e.src);
        const int c = division_index(e.dst);
        if (r < 0 || c < 0) {
            ++matrix.n_edges_skipped;
            continue;
        }
        ++counts[r][c];
        ++matrix.n_edges_used;
    }
    if (matrix.n_edges_used == 0) throw DataError("division_flow_matrix: no usable post-cutoff edges");

    matrix.fractions.assign(k, std::vector<double>(k, 0.0));
    matrix.row_totals.assign(k, 0.0);
    matrix.col_totals.assign(k, 0.0);
    const double total = static_cast<double>(matrix.n_edges_used);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            matrix.fractions[r][c] = static_cast<double>(counts[r][c]) / total;
            matrix.row_totals[r] += matrix.fractions[r][c];
            matrix.col_totals[c] += matrix.fractions[r][c];
        }
    }
    return matrix;
}

FlowFindings flow_findings(const FlowMatrix& matrix) {
    const std::size_t k = matrix.divisions.size();
    FlowFindings findings;
    findings.diagonal_dominant.resize(k, true);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            if (c != r && matrix.fractions[r][c] >= matrix.fractions[r][r]) {
                findings.diagonal_dominant[r] = false;
            }
        }
    }
    findings.all_diagonal_dominant =
        std::all_of(findings.diagonal_dominant.begin(), findings.diagonal_dominant.end(),
                    [](bool b) { return b; });

    auto is_top = [&](std::size_t i) {
        const Division d = matrix.divisions[i];
        return d == Division::DivI || d == Division::FBS || d == Division::FCS;
    };
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            if (is_top(r) && !is_top(c)) findings.top_division_downward += matrix.fractions[r][c];
            if (!is_top(r) && is_top(c)) findings.top_division_upward += matrix.fractions[r][c];
        }
    }
    findings.more_downward_than_upward = findings.top_division_downward > findings.top_division_upward;
    return findings;
}

} // namespace hirenet
