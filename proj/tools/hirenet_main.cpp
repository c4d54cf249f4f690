// Command-line front end: each subcommand reads CSV inputs, runs one
// analysis and writes CSV/JSON/GraphML outputs atomically, each with a
// .manifest.json provenance sidecar.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hirenet/community.hpp"
#include "hirenet/csv.hpp"
#include "hirenet/errors.hpp"
#include "hirenet/flows.hpp"
#include "hirenet/inequality.hpp"
#include "hirenet/ingest.hpp"
#include "hirenet/manifest.hpp"
#include "hirenet/network.hpp"
#include "hirenet/parallel.hpp"
#include "hirenet/ranking.hpp"
#include "hirenet/rankcorr.hpp"
#include "hirenet/temporal.hpp"
#include "hirenet/version.hpp"

namespace {

using nlohmann::json;

// Collects inputs/parameters for the manifest and writes outputs through
// the atomic path, so every output file gets the same provenance sidecar.
class Emitter {
  public:
    explicit Emitter(std::string command) { manifest_.command = std::move(command); }

    void input(const std::string& path) { manifest_.input_hashes[path] = hirenet::file_hash_hex(path); }
    void seed(long value) { manifest_.seed = value; }
    void param(const std::string& key, const std::string& value) { manifest_.parameters[key] = value; }
    void param(const std::string& key, double value) { param(key, hirenet::format_number(value)); }
    void param(const std::string& key, long value) { param(key, std::to_string(value)); }

    void write(const std::string& path, std::string_view content) {
        hirenet::write_file_atomic(path, content);
        hirenet::write_manifest(manifest_, path);
    }

  private:
    hirenet::RunManifest manifest_;
};

hirenet::Sport sport_from(const std::string& name) {
    auto sport = hirenet::parse_sport(name);
    if (!sport) throw hirenet::DataError("unknown sport: " + name);
    return *sport;
}

hirenet::SchoolTable load_schools(Emitter& emitter, const std::string& path) {
    if (path.empty()) return {};
    emitter.input(path);
    auto result = hirenet::parse_school_table(path);
    if (result.warnings() > 0) {
        std::cerr << "schools: " << result.duplicate_ids << " duplicate ids, " << result.rejected_rows
                  << " rejected rows, " << result.unknown_divisions << " unknown divisions\n";
    }
    return std::move(result.schools);
}

std::string ranking_csv(const hirenet::Ranking& ranking) {
    std::string out = "rank,school,score,method\n";
    for (const auto& entry : ranking.entries) {
        hirenet::append_csv_row(out, {std::to_string(entry.rank), entry.school,
                                      hirenet::format_number(entry.score),
                                      std::string(hirenet::to_string(ranking.method))});
    }
    return out;
}

std::string histogram_csv(const std::map<int, std::size_t>& counts, const std::string& key_name) {
    std::string out = key_name + ",count\n";
    for (const auto& [key, count] : counts) {
        out += std::to_string(key) + "," + std::to_string(count) + "\n";
    }
    return out;
}

json drop_report_json(const hirenet::DropReport& report) {
    return json{{"missing_alma_mater", report.missing_alma_mater},
                {"missing_grad_year", report.missing_grad_year},
                {"stint_before_graduation", report.stint_before_graduation},
                {"malformed_row", report.malformed_row},
                {"total", report.total()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- build
struct BuildOpts {
    std::string coaches, schools, sport = "football", out, drop_report;
};

int run_build(const BuildOpts& opt) {
    Emitter emitter("build");
    emitter.input(opt.coaches);
    auto [records, report] = hirenet::parse_coach_records(opt.coaches);
    auto schools = load_schools(emitter, opt.schools);
    emitter.param("sport", opt.sport);
    emitter.seed(42);

    auto network = hirenet::build_network(records, schools, sport_from(opt.sport));
    std::cout << "parsed " << records.size() << " coaches (" << report.total() << " rows dropped), "
              << network.node_count() << " schools, " << network.edge_count() << " hires\n";

    emitter.write(opt.out, hirenet::edge_list_csv(network));
    if (!opt.drop_report.empty()) emitter.write(opt.drop_report, dump(drop_report_json(report)));
    return 0;
}

// -------------------------------------------------------------- summary
struct SummaryOpts {
    std::string in, out;
};

int run_summary(const SummaryOpts& opt) {
    Emitter emitter("summary");
    emitter.input(opt.in);
    emitter.seed(42);
    auto network = hirenet::read_edge_list(opt.in, hirenet::Sport::Football);
    auto s = hirenet::summarize(network);
    json j{{"n_schools", s.n_schools},
           {"n_coaches", s.n_coaches},
           {"n_edges", s.n_edges},
           {"mean_degree", s.mean_degree},
           {"self_loop_fraction", s.self_loop_fraction},
           {"mean_hiring_years", s.mean_hiring_years},
           {"year_range", {{"min_grad_year", s.min_grad_year}, {"max_grad_year", s.max_grad_year}}}};
    emitter.write(opt.out, dump(j));
    return 0;
}

// ----------------------------------------------------------- inequality
struct InequalityOpts {
    std::string in, out, lorenz, degree = "out";
};

int run_inequality(const InequalityOpts& opt) {
    Emitter emitter("inequality");
    emitter.input(opt.in);
    emitter.param("degree", opt.degree);
    emitter.seed(42);
    auto network = hirenet::read_edge_list(opt.in, hirenet::Sport::Football);
    auto report = hirenet::inequality_report(network);
    json j{{"gini_out", report.gini_out},
           {"gini_in", report.gini_in},
           {"coverage_50", report.coverage_50},
           {"net_producers", report.net_producers},
           {"net_producer_fraction", report.net_producer_fraction},
           {"n_schools", network.node_count()}};
    emitter.write(opt.out, dump(j));

    if (!opt.lorenz.empty()) {
        auto degrees = opt.degree == "in" ? hirenet::in_degree_vector(network)
                                          : hirenet::out_degree_vector(network);
        auto curve = hirenet::lorenz(std::vector<double>(degrees.begin(), degrees.end()));
        std::string csv = "population_fraction,value_fraction\n";
        for (const auto& point : curve.points) {
            csv += hirenet::format_number(point.population_fraction) + "," +
                   hirenet::format_number(point.value_fraction) + "\n";
        }
        emitter.write(opt.lorenz, csv);
    }
    return 0;
}

// ---------------------------------------------------------- communities
struct CommunitiesOpts {
    std::string in, out, report;
    long seed = 42;
    int runs = 1;
};

int run_communities(const CommunitiesOpts& opt) {
    Emitter emitter("communities");
    emitter.input(opt.in);
    emitter.seed(opt.seed);
    emitter.param("runs", static_cast<long>(opt.runs));
    auto network = hirenet::read_edge_list(opt.in, hirenet::Sport::Football);

    auto partition = hirenet::louvain(network, static_cast<std::uint32_t>(opt.seed));
    std::string csv = "school,community\n";
    for (const auto& [school, label] : partition.assignment) {
        hirenet::append_csv_row(csv, {school, std::to_string(label)});
    }
    emitter.write(opt.out, csv);

    if (!opt.report.empty()) {
        auto rep = hirenet::community_report(partition);
        json j{{"n_communities", rep.n_communities},
               {"sizes", rep.sizes},
               {"top6_coverage", rep.top6_coverage},
               {"modularity", rep.modularity}};
        if (opt.runs > 1) {
            std::vector<double> qs;
            double sum = 0;
            for (int r = 0; r < opt.runs; ++r) {
                auto p = hirenet::louvain(network, static_cast<std::uint32_t>(opt.seed + r));
                qs.push_back(p.modularity);
                sum += p.modularity;
            }
            j["run_modularities"] = qs;
            j["mean_modularity"] = sum / opt.runs;
        }
        emitter.write(opt.report, dump(j));
    }
    return 0;
}

// ----------------------------------------------------------------- rank
struct RankOpts {
    std::string method = "pagerank", in, out, meta;
    double damping = 0.85, tol = 1e-12;
    long seed = 42;
    int restarts = 50, steps = 20000;
};

int run_rank(const RankOpts& opt) {
    Emitter emitter("rank");
    emitter.input(opt.in);
    emitter.seed(opt.seed);
    emitter.param("method", opt.method);
    auto network = hirenet::read_edge_list(opt.in, hirenet::Sport::Football);

    hirenet::Ranking ranking;
    if (opt.method == "outdegree") {
        ranking = hirenet::outdegree_ranking(network);
    } else if (opt.method == "pagerank") {
        emitter.param("damping", opt.damping);
        emitter.param("tolerance", opt.tol);
        ranking = hirenet::pagerank(network, opt.damping, opt.tol);
    } else if (opt.method == "leaderrank") {
        emitter.param("tolerance", opt.tol);
        ranking = hirenet::leaderrank(network, opt.tol);
    } else if (opt.method == "mvr") {
        emitter.param("restarts", static_cast<long>(opt.restarts));
        emitter.param("steps", static_cast<long>(opt.steps));
        auto result = hirenet::mvr(network, static_cast<std::uint32_t>(opt.seed), opt.restarts, opt.steps);
        ranking = hirenet::mvr_ranking(result);
        if (!opt.meta.empty()) {
            json j{{"violations", result.violations},
                   {"restarts_used", result.restarts_used},
                   {"restarts", opt.restarts},
                   {"steps", opt.steps},
                   {"seed", opt.seed}};
            emitter.write(opt.meta, dump(j));
        }
    } else {
        throw hirenet::DataError("unknown ranking method: " + opt.method);
    }
    emitter.write(opt.out, ranking_csv(ranking));
    return 0;
}

// -------------------------------------------------------------- windows
struct WindowsOpts {
    std::string coaches, out, grad_hist, growth_hist;
    double fraction = 0.3;
};

int run_windows(const WindowsOpts& opt) {
    Emitter emitter("windows");
    emitter.input(opt.coaches);
    emitter.param("fraction", opt.fraction);
    emitter.seed(42);
    auto [records, report] = hirenet::parse_coach_records(opt.coaches);
    if (records.empty()) throw hirenet::DataError("windows: no valid coach records in " + opt.coaches);
    (void)report;

    auto windows = hirenet::extract_windows(records, opt.fraction);
    std::string csv = "t_s,t_e,coach_count\n";
    for (const auto& w : windows) {
        csv += std::to_string(w.t_s) + "," + std::to_string(w.t_e) + "," + std::to_string(w.coach_count) + "\n";
    }
    emitter.write(opt.out, csv);

    if (!opt.grad_hist.empty()) {
        emitter.write(opt.grad_hist, histogram_csv(hirenet::graduation_histogram(records), "year"));
    }
    if (!opt.growth_hist.empty()) {
        auto hist = hirenet::growth_time_histogram(records);
        emitter.write(opt.growth_hist, histogram_csv(hist.counts, "growth_years"));
        std::cout << "growth_time_mean=" << hirenet::format_number(hist.mean) << "\n";
    }
    std::cout << windows.size() << " windows at fraction " << hirenet::format_number(opt.fraction) << "\n";
    return 0;
}

// ----------------------------------------------------------- aggregate-ap
struct AggregateOpts {
    std::string ap, sport = "football", out, universe = "any";
    int span_years = 20;
    bool rolling = false;
};

hirenet::UniverseRule universe_rule(const std::string& name) {
    return name == "all" ? hirenet::UniverseRule::EveryYear : hirenet::UniverseRule::AnyYear;
}

int run_aggregate(const AggregateOpts& opt) {
    Emitter emitter("aggregate-ap");
    emitter.input(opt.ap);
    emitter.param("sport", opt.sport);
    emitter.param("span_years", static_cast<long>(opt.span_years));
    emitter.param("rolling", opt.rolling ? "true" : "false");
    emitter.param("universe", opt.universe);
    emitter.seed(42);

    auto table = hirenet::parse_ap_polls(opt.ap, sport_from(opt.sport));
    auto polls = hirenet::aggregate_polls(table, opt.span_years, opt.rolling, universe_rule(opt.universe));
    if (polls.empty()) throw hirenet::DataError("aggregate-ap: no poll years for " + opt.sport);

    std::string csv = "span_start,span_end,rank,school,score\n";
    for (const auto& poll : polls) {
        for (const auto& entry : poll.ranking.entries) {
            hirenet::append_csv_row(csv, {std::to_string(poll.span.start), std::to_string(poll.span.end),
                                          std::to_string(entry.rank), entry.school,
                                          hirenet::format_number(entry.score)});
        }
    }
    emitter.write(opt.out, csv);
    return 0;
}

// ------------------------------------------------------------- corr-grid
struct CorrGridOpts {
    std::string ap, coaches, schools, sport = "football", out, long_out, method = "pagerank";
    std::string universe = "any";
    double fraction = 0.3, damping = 0.85, tol = 1e-12;
    int span_years = 20, restarts = 50, steps = 20000, threads = 1;
    long seed = 42;
    bool rolling = false;
};

int run_corr_grid(const CorrGridOpts& opt) {
    Emitter emitter("corr-grid");
    emitter.input(opt.ap);
    emitter.input(opt.coaches);
    emitter.seed(opt.seed);
    emitter.param("sport", opt.sport);
    emitter.param("fraction", opt.fraction);
    emitter.param("span_years", static_cast<long>(opt.span_years));
    emitter.param("rolling", opt.rolling ? "true" : "false");
    emitter.param("universe", opt.universe);
    emitter.param("method", opt.method);

    const auto sport = sport_from(opt.sport);
    auto [records, report] = hirenet::parse_coach_records(opt.coaches);
    (void)report;
    if (records.empty()) throw hirenet::DataError("corr-grid: no valid coach records");
    auto schools = load_schools(emitter, opt.schools);
    auto network = hirenet::build_network(records, schools, sport);
    auto windows = hirenet::extract_windows(records, opt.fraction);

    std::vector<std::pair<hirenet::Window, hirenet::Ranking>> production(windows.size());
    hirenet::parallel_for(windows.size(), opt.threads, [&](std::size_t i) {
        auto sub = hirenet::subnetwork(network, windows[i]);
        hirenet::Ranking ranking;
        if (opt.method == "outdegree") {
            ranking = hirenet::outdegree_ranking(sub);
        } else if (opt.method == "leaderrank") {
            ranking = hirenet::leaderrank(sub, opt.tol);
        } else if (opt.method == "mvr") {
            ranking = hirenet::mvr_ranking(
                hirenet::mvr(sub, static_cast<std::uint32_t>(opt.seed), opt.restarts, opt.steps));
        } else {
            ranking = hirenet::pagerank(sub, opt.damping, opt.tol);
        }
        production[i] = {windows[i], std::move(ranking)};
    });

    auto table = hirenet::parse_ap_polls(opt.ap, sport);
    auto polls = hirenet::aggregate_polls(table, opt.span_years, opt.rolling, universe_rule(opt.universe));
    if (polls.empty()) throw hirenet::DataError("corr-grid: no poll years for " + opt.sport);

    auto grid = hirenet::correlation_grid(polls, production, opt.threads);

    std::string wide = "window";
    for (const auto& span : grid.cols) wide += "," + span.label();
    wide += "\n";
    for (std::size_t i = 0; i < grid.rows.size(); ++i) {
        wide += std::to_string(grid.rows[i].t_s) + "-" + std::to_string(grid.rows[i].t_e);
        for (std::size_t j = 0; j < grid.cols.size(); ++j) {
            wide += ",";
            if (!std::isnan(grid.tau[i][j])) wide += hirenet::format_number(grid.tau[i][j]);
        }
        wide += "\n";
    }
    emitter.write(opt.out, wide);

    if (!opt.long_out.empty()) {
        std::string narrow = "ap_span,window,tau\n";
        for (std::size_t j = 0; j < grid.cols.size(); ++j) {
            for (std::size_t i = 0; i < grid.rows.size(); ++i) {
                narrow += grid.cols[j].label() + "," + std::to_string(grid.rows[i].t_s) + "-" +
                          std::to_string(grid.rows[i].t_e) + ",";
                if (!std::isnan(grid.tau[i][j])) narrow += hirenet::format_number(grid.tau[i][j]);
                narrow += "\n";
            }
        }
        emitter.write(opt.long_out, narrow);
    }
    return 0;
}

// ----------------------------------------------------------------- flows
struct FlowsOpts {
    std::string in, schools, sport = "football", out, findings;
    int cutoff = 1973;
    bool inclusive = false;
};

int run_flows(const FlowsOpts& opt) {
    Emitter emitter("flows");
    emitter.input(opt.in);
    emitter.param("sport", opt.sport);
    emitter.param("cutoff_year", static_cast<long>(opt.cutoff));
    emitter.param("inclusive_cutoff", opt.inclusive ? "true" : "false");
    emitter.seed(42);

    auto schools = load_schools(emitter, opt.schools);
    auto network = hirenet::read_edge_list(opt.in, sport_from(opt.sport), schools);
    auto matrix = hirenet::division_flow_matrix(network, schools, opt.cutoff, opt.inclusive);

    std::string csv = "division";
    for (auto d : matrix.divisions) csv += "," + std::string(hirenet::to_string(d));
    csv += ",All\n";
    for (std::size_t r = 0; r < matrix.divisions.size(); ++r) {
        csv += std::string(hirenet::to_string(matrix.divisions[r]));
        for (std::size_t c = 0; c < matrix.divisions.size(); ++c) {
            csv += "," + hirenet::format_number(matrix.fractions[r][c]);
        }
        csv += "," + hirenet::format_number(matrix.row_totals[r]) + "\n";
    }
    csv += "All";
    for (std::size_t c = 0; c < matrix.divisions.size(); ++c) {
        csv += "," + hirenet::format_number(matrix.col_totals[c]);
    }
    csv += ",\n";
    emitter.write(opt.out, csv);

    if (!opt.findings.empty()) {
        auto findings = hirenet::flow_findings(matrix);
        json dominant = json::object();
        for (std::size_t r = 0; r < matrix.divisions.size(); ++r) {
            dominant[std::string(hirenet::to_string(matrix.divisions[r]))] =
                static_cast<bool>(findings.diagonal_dominant[r]);
        }
        json j{{"diagonal_dominant_rows", dominant},
               {"all_rows_diagonal_dominant", findings.all_diagonal_dominant},
               {"top_division_downward", findings.top_division_downward},
               {"top_division_upward", findings.top_division_upward},
               {"more_downward_than_upward", findings.more_downward_than_upward},
               {"n_edges_used", matrix.n_edges_used},
               {"n_edges_skipped", matrix.n_edges_skipped}};
        emitter.write(opt.findings, dump(j));
    }
    return 0;
}

// ------------------------------------------------------------- export-geo
struct GeoOpts {
    std::string in, schools, sport = "football", out, dot;
    long seed = 42;
};

int run_export_geo(const GeoOpts& opt) {
    Emitter emitter("export-geo");
    emitter.input(opt.in);
    emitter.seed(opt.seed);
    emitter.param("sport", opt.sport);

    auto schools = load_schools(emitter, opt.schools);
    auto network = hirenet::read_edge_list(opt.in, sport_from(opt.sport), schools);
    auto partition = hirenet::louvain(network, static_cast<std::uint32_t>(opt.seed));
    auto exported = hirenet::make_geo_export(network, partition);
    emitter.write(opt.out, exported.graphml);
    if (!opt.dot.empty()) emitter.write(opt.dot, exported.dot);
    if (exported.skipped_nodes > 0) {
        std::cerr << "export-geo: skipped " << exported.skipped_nodes << " nodes without coordinates\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coach hiring network analysis"};
    app.require_subcommand(1);

    BuildOpts build_opts;
    auto* build = app.add_subcommand("build", "Build the hiring network edge list from coach records");
    build->add_option("--coaches", build_opts.coaches, "coaches.csv")->required();
    build->add_option("--schools", build_opts.schools, "schools.csv (optional attributes)");
    build->add_option("--sport", build_opts.sport)->check(CLI::IsMember({"football", "basketball"}));
    build->add_option("--out", build_opts.out, "edge-list CSV")->required();
    build->add_option("--drop-report", build_opts.drop_report, "JSON drop counts");

    SummaryOpts summary_opts;
    auto* summary = app.add_subcommand("summary", "Summarize an edge list");
    summary->add_option("--in", summary_opts.in)->required();
    summary->add_option("--out", summary_opts.out)->required();

    InequalityOpts ineq_opts;
    auto* ineq = app.add_subcommand("inequality", "Gini, coverage and Lorenz curve");
    ineq->add_option("--in", ineq_opts.in)->required();
    ineq->add_option("--out", ineq_opts.out, "JSON report")->required();
    ineq->add_option("--lorenz", ineq_opts.lorenz, "Lorenz points CSV");
    ineq->add_option("--degree", ineq_opts.degree)->check(CLI::IsMember({"out", "in"}));

    CommunitiesOpts comm_opts;
    auto* comm = app.add_subcommand("communities", "Community detection by modularity optimization");
    comm->add_option("--in", comm_opts.in)->required();
    comm->add_option("--out", comm_opts.out, "partition CSV")->required();
    comm->add_option("--report", comm_opts.report, "JSON community report");
    comm->add_option("--seed", comm_opts.seed);
    comm->add_option("--runs", comm_opts.runs, "extra seeded runs reported")->check(CLI::Range(1, 1000));

    RankOpts rank_opts;
    auto* rank = app.add_subcommand("rank", "Rank schools by coach production");
    rank->add_option("--method", rank_opts.method)
        ->check(CLI::IsMember({"outdegree", "mvr", "pagerank", "leaderrank"}));
    rank->add_option("--in", rank_opts.in)->required();
    rank->add_option("--out", rank_opts.out)->required();
    rank->add_option("--meta", rank_opts.meta, "MVR metadata JSON");
    rank->add_option("--damping", rank_opts.damping)->check(CLI::Range(1e-6, 1.0 - 1e-6));
    rank->add_option("--tol", rank_opts.tol)->check(CLI::Range(1e-15, 1.0));
    rank->add_option("--seed", rank_opts.seed);
    rank->add_option("--restarts", rank_opts.restarts)->check(CLI::Range(1, 100000));
    rank->add_option("--steps", rank_opts.steps)->check(CLI::Range(0, 100000000));

    WindowsOpts win_opts;
    auto* windows = app.add_subcommand("windows", "Temporal windows and histograms");
    windows->add_option("--coaches", win_opts.coaches)->required();
    windows->add_option("--fraction", win_opts.fraction)->check(CLI::Range(1e-9, 1.0));
    windows->add_option("--out", win_opts.out)->required();
    windows->add_option("--grad-hist", win_opts.grad_hist, "graduation-year histogram CSV");
    windows->add_option("--growth-hist", win_opts.growth_hist, "growth-time histogram CSV");

    AggregateOpts agg_opts;
    auto* agg = app.add_subcommand("aggregate-ap", "Aggregate AP polls over year spans");
    agg->add_option("--ap", agg_opts.ap)->required();
    agg->add_option("--sport", agg_opts.sport)->check(CLI::IsMember({"football", "basketball"}));
    agg->add_option("--out", agg_opts.out)->required();
    agg->add_option("--span-years", agg_opts.span_years)->check(CLI::Range(1, 200));
    agg->add_flag("--rolling", agg_opts.rolling, "stride 1 instead of span length");
    agg->add_option("--universe", agg_opts.universe)->check(CLI::IsMember({"any", "all"}));

    CorrGridOpts grid_opts;
    auto* grid = app.add_subcommand("corr-grid", "Kendall tau grid of AP spans vs production windows");
    grid->add_option("--ap", grid_opts.ap)->required();
    grid->add_option("--coaches", grid_opts.coaches)->required();
    grid->add_option("--schools", grid_opts.schools);
    grid->add_option("--sport", grid_opts.sport)->check(CLI::IsMember({"football", "basketball"}));
    grid->add_option("--out", grid_opts.out, "wide CSV")->required();
    grid->add_option("--long", grid_opts.long_out, "long-format CSV");
    grid->add_option("--fraction", grid_opts.fraction)->check(CLI::Range(1e-9, 1.0));
    grid->add_option("--span-years", grid_opts.span_years)->check(CLI::Range(1, 200));
    grid->add_flag("--rolling", grid_opts.rolling);
    grid->add_option("--universe", grid_opts.universe)->check(CLI::IsMember({"any", "all"}));
    grid->add_option("--method", grid_opts.method)
        ->check(CLI::IsMember({"outdegree", "mvr", "pagerank", "leaderrank"}));
    grid->add_option("--damping", grid_opts.damping)->check(CLI::Range(1e-6, 1.0 - 1e-6));
    grid->add_option("--tol", grid_opts.tol)->check(CLI::Range(1e-15, 1.0));
    grid->add_option("--seed", grid_opts.seed);
    grid->add_option("--restarts", grid_opts.restarts)->check(CLI::Range(1, 100000));
    grid->add_option("--steps", grid_opts.steps)->check(CLI::Range(0, 100000000));
    grid->add_option("--threads", grid_opts.threads)->check(CLI::Range(1, 256));

    FlowsOpts flow_opts;
    auto* flows = app.add_subcommand("flows", "Division-level movement matrix");
    flows->add_option("--in", flow_opts.in)->required();
    flows->add_option("--schools", flow_opts.schools)->required();
    flows->add_option("--sport", flow_opts.sport)->check(CLI::IsMember({"football", "basketball"}));
    flows->add_option("--out", flow_opts.out)->required();
    flows->add_option("--findings", flow_opts.findings, "JSON findings report");
    flows->add_option("--cutoff", flow_opts.cutoff, "graduation-year cutoff");
    flows->add_flag("--inclusive-cutoff", flow_opts.inclusive, "use >= instead of >");

    GeoOpts geo_opts;
    auto* geo = app.add_subcommand("export-geo", "GraphML/DOT export with geography and communities");
    geo->add_option("--in", geo_opts.in)->required();
    geo->add_option("--schools", geo_opts.schools)->required();
    geo->add_option("--sport", geo_opts.sport)->check(CLI::IsMember({"football", "basketball"}));
    geo->add_option("--out", geo_opts.out, "GraphML file")->required();
    geo->add_option("--dot", geo_opts.dot, "DOT file");
    geo->add_option("--seed", geo_opts.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(build)) return run_build(build_opts);
        if (app.got_subcommand(summary)) return run_summary(summary_opts);
        if (app.got_subcommand(ineq)) return run_inequality(ineq_opts);
        if (app.got_subcommand(comm)) return run_communities(comm_opts);
        if (app.got_subcommand(rank)) return run_rank(rank_opts);
        if (app.got_subcommand(windows)) return run_windows(win_opts);
        if (app.got_subcommand(agg)) return run_aggregate(agg_opts);
        if (app.got_subcommand(grid)) return run_corr_grid(grid_opts);
        if (app.got_subcommand(flows)) return run_flows(flow_opts);
        if (app.got_subcommand(geo)) return run_export_geo(geo_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2; // no subcommand matched
}
