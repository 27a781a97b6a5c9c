#include "ringhop/output.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>

#include <json.hpp>

namespace ringhop {

using nlohmann::json;

std::string format_sci(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", value);
    return buf;
}

void write_report_csv(std::ostream& out, const EnergyReport& report) {
    out << "action,ring,e_tx_j,e_rx_j,e_total_j,bottleneck_ring,bottleneck_j\n";
    const std::string action = report.action.to_string();
    const std::string tail = "," + std::to_string(report.bottleneck_ring) + "," +
                             format_sci(report.bottleneck_j) + "\n";
    out << action << ",0," << format_sci(0.0) << ',' << format_sci(report.gw_rx_j) << ','
        << format_sci(report.gw_rx_j) << tail;
    for (int r = 1; r <= report.action.size(); ++r) {
        const std::size_t i = static_cast<std::size_t>(r - 1);
        out << action << ',' << r << ',' << format_sci(report.tx_j[i]) << ','
            << format_sci(report.rx_j[i]) << ',' << format_sci(report.tx_j[i] + report.rx_j[i])
            << tail;
    }
}

void write_iteration_csv(std::ostream& out, const ExperimentSummary& summary) {
    out << "iteration,mean_bottleneck_j,mean_historic_bottleneck_j,"
           "std_historic_bottleneck_j\n";
    for (std::size_t i = 0; i < summary.per_iteration.size(); ++i) {
        const IterationAggregate& agg = summary.per_iteration[i];
        out << (i + 1) << ',' << format_sci(agg.mean_bottleneck_j) << ','
            << format_sci(agg.mean_historic_j) << ',' << format_sci(agg.std_historic_j)
            << '\n';
    }
}

void write_cdf_csv(std::ostream& out, const Cdf& cdf, const std::string& value_column) {
    out << value_column << ",cum_fraction\n";
    for (const auto& [value, fraction] : cdf.points) {
        out << value << ',' << format_sci(fraction) << '\n';
    }
}

void write_ratio_csv(std::ostream& out, const ExperimentSummary& plain,
                     const ExperimentSummary& with_similarity) {
    out << "iteration,historic_plain_j,historic_similarity_j,improvement_ratio\n";
    for (std::int64_t i = 1; i <= plain.iterations(); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i - 1);
        out << i << ',' << format_sci(plain.per_iteration[idx].mean_historic_j) << ','
            << format_sci(with_similarity.per_iteration[idx].mean_historic_j) << ','
            << format_sci(similarity_ratio(plain, with_similarity, i)) << '\n';
    }
}

void write_manifest(std::ostream& out, const ExperimentConfig& config,
                    const ExperimentSummary& summary) {
    json j;
    j["scenario_name"] = config.scenario.name;
    j["config"] = json::parse(to_json_string(config));
    j["resolved_max_distance_m"] = summary.fingerprint.max_distance_m;
    j["seeds"]["base"] = config.run.seed_base;
    j["seeds"]["per_repetition"] = "seed_base + repetition_index";
    j["oracle"]["action"] = summary.oracle_action.to_string();
    j["oracle"]["bottleneck_j"] = summary.oracle_bottleneck_j;
    std::int64_t censored_optimal = 0;
    for (std::int64_t v : summary.optimal_iterations) censored_optimal += v < 0;
    std::int64_t censored_explored = 0;
    for (std::int64_t v : summary.all_explored_iterations) censored_explored += v < 0;
    std::int64_t infeasible = 0;
    for (std::int64_t v : summary.infeasible_rounds) infeasible += v;
    j["stats"]["repetitions"] = summary.repetitions();
    j["stats"]["mean_optimal_iteration"] =
        censored_optimal == summary.repetitions() ? json() : json(summary.mean_optimal_iteration());
    j["stats"]["censored_optimal_iteration"] = censored_optimal;
    j["stats"]["mean_all_explored_iteration"] =
        censored_explored == summary.repetitions() ? json()
                                                   : json(summary.mean_all_explored_iteration());
    j["stats"]["censored_all_explored_iteration"] = censored_explored;
    j["stats"]["infeasible_rounds_total"] = infeasible;
    j["stats"]["final_mean_historic_bottleneck_j"] =
        summary.per_iteration.back().mean_historic_j;
    out << j.dump(2) << '\n';
}

namespace {

void write_file(const std::filesystem::path& path,
                const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigurationError("cannot write " + path.string());
    body(out);
}

}  // namespace

void write_experiment_outputs(const std::filesystem::path& dir, const ExperimentConfig& config,
                              const ExperimentSummary& summary, bool json_mirrors) {
    std::filesystem::create_directories(dir);
    const DistributionStats stats = distribution_stats(summary);
    write_file(dir / "iterations.csv",
               [&](std::ostream& out) { write_iteration_csv(out, summary); });
    write_file(dir / "optimal_iteration_cdf.csv", [&](std::ostream& out) {
        write_cdf_csv(out, stats.optimal_iteration, "iteration");
    });
    write_file(dir / "all_explored_cdf.csv", [&](std::ostream& out) {
        write_cdf_csv(out, stats.all_explored_iteration, "iteration");
    });
    write_file(dir / "manifest.json",
               [&](std::ostream& out) { write_manifest(out, config, summary); });
    if (json_mirrors) {
        json j;
        for (std::size_t i = 0; i < summary.per_iteration.size(); ++i) {
            j["iterations"].push_back({{"iteration", i + 1},
                                       {"mean_bottleneck_j", summary.per_iteration[i].mean_bottleneck_j},
                                       {"mean_historic_bottleneck_j",
                                        summary.per_iteration[i].mean_historic_j},
                                       {"std_historic_bottleneck_j",
                                        summary.per_iteration[i].std_historic_j}});
        }
        for (const auto& [value, fraction] : stats.optimal_iteration.points) {
            j["optimal_iteration_cdf"].push_back({{"iteration", value}, {"cum_fraction", fraction}});
        }
        for (const auto& [value, fraction] : stats.all_explored_iteration.points) {
            j["all_explored_cdf"].push_back({{"iteration", value}, {"cum_fraction", fraction}});
        }
        write_file(dir / "results.json", [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    }
}

}  // namespace ringhop
