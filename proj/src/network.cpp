#include "hirenet/network.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>
#include <unordered_map>

#include "hirenet/csv.hpp"
#include "hirenet/errors.hpp"
#include "hirenet/manifest.hpp"

namespace hirenet {

HiringNetwork HiringNetwork::from_edges(Sport sport, std::vector<RawHire> hires,
                                        const SchoolTable& schools,
                                        const std::vector<std::string>& extra_nodes) {
    for (const RawHire& h : hires) {
        if (h.src.empty() || h.dst.empty()) throw std::invalid_argument("hire with empty endpoint");
        if (h.tenure_years < 1) throw std::invalid_argument("hire with tenure < 1");
        if (h.grad_year > h.hire_year) throw std::invalid_argument("hire before graduation");
    }

    std::set<std::string> ids(extra_nodes.begin(), extra_nodes.end());
    for (const RawHire& h : hires) {
        ids.insert(h.src);
        ids.insert(h.dst);
    }

    HiringNetwork net;
    net.sport_ = sport;
    net.nodes_.assign(ids.begin(), ids.end());
    net.info_.reserve(net.nodes_.size());
    for (const std::string& id : net.nodes_) {
        auto it = schools.find(id);
        if (it != schools.end()) {
            net.info_.push_back(it->second);
        } else {
            SchoolInfo info;
            info.school = id;
            info.display_name = id;
            net.info_.push_back(std::move(info));
        }
    }

    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(net.nodes_.size());
    for (std::uint32_t i = 0; i < net.nodes_.size(); ++i) index.emplace(net.nodes_[i], i);

    net.edges_.reserve(hires.size());
    for (RawHire& h : hires) {
        HiringEdge e;
        e.src = index.at(h.src);
        e.dst = index.at(h.dst);
        e.coach_id = std::move(h.coach_id);
        e.grad_year = h.grad_year;
        e.hire_year = h.hire_year;
        e.tenure_years = h.tenure_years;
        net.edges_.push_back(std::move(e));
    }
    // Node ids are sorted, so index order is lexicographic order; sorting by
    // indices gives a canonical, input-order-independent edge sequence.
    std::sort(net.edges_.begin(), net.edges_.end(), [](const HiringEdge& a, const HiringEdge& b) {
        return std::tie(a.src, a.dst, a.coach_id, a.hire_year, a.grad_year, a.tenure_years) <
               std::tie(b.src, b.dst, b.coach_id, b.hire_year, b.grad_year, b.tenure_years);
    });
    return net;
}

std::optional<std::uint32_t> HiringNetwork::index_of(std::string_view school) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), school);
    if (it == nodes_.end() || *it != school) return std::nullopt;
    return static_cast<std::uint32_t>(it - nodes_.begin());
}

HiringNetwork build_network(const std::vector<CoachRecord>& records, const SchoolTable& schools,
                            Sport sport) {
    std::vector<RawHire> hires;
    for (const CoachRecord& record : records) {
        for (const Stint& stint : record.stints) {
            RawHire h;
            h.src = record.alma_mater;
            h.dst = stint.school;
            h.coach_id = record.coach_id;
            h.grad_year = record.grad_year;
            h.hire_year = stint.start_year;
            h.tenure_years = stint.end_year - stint.start_year + 1;
            hires.push_back(std::move(h));
        }
    }
    return HiringNetwork::from_edges(sport, std::move(hires), schools);
}

NetworkSummary summarize(const HiringNetwork& network) {
    if (network.node_count() == 0 || network.edge_count() == 0) {
        throw DataError("summarize: empty network");
    }

    NetworkSummary s;
    s.n_schools = network.node_count();
    s.n_edges = network.edge_count();

    std::set<std::string> coaches;
    std::set<std::string> self_serving;
    double tenure_sum = 0;
    s.min_grad_year = network.edges().front().grad_year;
    s.max_grad_year = s.min_grad_year;
    for (const HiringEdge& e : network.edges()) {
        coaches.insert(e.coach_id);
        if (e.src == e.dst) self_serving.insert(e.coach_id);
        tenure_sum += e.tenure_years;
        s.min_grad_year = std::min(s.min_grad_year, e.grad_year);
        s.max_grad_year = std::max(s.max_grad_year, e.grad_year);
    }
    s.n_coaches = coaches.size();
    // Table-1 convention: edges per school, each edge counted once.
    s.mean_degree = static_cast<double>(s.n_edges) / static_cast<double>(s.n_schools);
    s.self_loop_fraction = static_cast<double>(self_serving.size()) / static_cast<double>(s.n_coaches);
    s.mean_hiring_years = tenure_sum / static_cast<double>(s.n_edges);
    return s;
}

std::vector<std::size_t> out_degree_vector(const HiringNetwork& network) {
    std::vector<std::size_t> out(network.node_count(), 0);
    for (const HiringEdge& e : network.edges()) ++out[e.src];
    return out;
}

std::vector<std::size_t> in_degree_vector(const HiringNetwork& network) {
    std::vector<std::size_t> in(network.node_count(), 0);
    for (const HiringEdge& e : network.edges()) ++in[e.dst];
    return in;
}

std::pair<std::map<std::string, std::size_t>, std::map<std::string, std::size_t>>
degree_sequences(const HiringNetwork& network) {
    auto out_vec = out_degree_vector(network);
    auto in_vec = in_degree_vector(network);
    std::map<std::string, std::size_t> out, in;
    for (std::uint32_t i = 0; i < network.node_count(); ++i) {
        out[network.id_of(i)] = out_vec[i];
        in[network.id_of(i)] = in_vec[i];
    }
    return {std::move(out), std::move(in)};
}

std::string edge_list_csv(const HiringNetwork& network) {
    std::string out = "src,dst,coach_id,grad_year,hire_year,tenure_years\n";
    for (const HiringEdge& e : network.edges()) {
        append_csv_row(out, {network.id_of(e.src), network.id_of(e.dst), e.coach_id,
                             std::to_string(e.grad_year), std::to_string(e.hire_year),
                             std::to_string(e.tenure_years)});
    }
    return out;
}

void write_edge_list(const HiringNetwork& network, const std::string& path) {
    write_file_atomic(path, edge_list_csv(network));
}

HiringNetwork read_edge_list(const std::string& path, Sport sport, const SchoolTable& schools) {
    CsvTable table = read_csv_file(path);
    const std::vector<std::string> expected = {"src",       "dst",       "coach_id",
                                               "grad_year", "hire_year", "tenure_years"};
    if (table.header != expected) {
        throw SchemaError(path + ": not an edge-list file (unexpected header)");
    }

    auto to_int = [&](const std::string& text, std::size_t row) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw SchemaError(path + ": row " + std::to_string(row + 2) + " has a non-integer year");
        }
        return value;
    };

    std::vector<RawHire> hires;
    hires.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        if (row.size() != 6 || row[0].empty() || row[1].empty() || row[2].empty()) {
            throw SchemaError(path + ": row " + std::to_string(i + 2) + " malformed");
        }
        RawHire h;
        h.src = row[0];
        h.dst = row[1];
        h.coach_id = row[2];
        h.grad_year = to_int(row[3], i);
        h.hire_year = to_int(row[4], i);
        h.tenure_years = to_int(row[5], i);
        if (h.tenure_years < 1 || h.grad_year > h.hire_year) {
            throw SchemaError(path + ": row " + std::to_string(i + 2) + " violates edge invariants");
        }
        hires.push_back(std::move(h));
    }
    return HiringNetwork::from_edges(sport, std::move(hires), schools);
}

} // namespace hirenet
