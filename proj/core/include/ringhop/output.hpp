#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ringhop/config.hpp"
#include "ringhop/experiment.hpp"

namespace ringhop {

/// Scientific notation with 13 significant digits ("%.12e"), the fixed
/// format of every energy column.
std::string format_sci(double value);

/// Columns: action,ring,e_tx_j,e_rx_j,e_total_j,bottleneck_ring,bottleneck_j.
/// One row per ring, gateway first as ring 0 (TX always zero there).
void write_report_csv(std::ostream& out, const EnergyReport& report);

/// Columns: iteration,mean_bottleneck_j,mean_historic_bottleneck_j,
/// std_historic_bottleneck_j.
void write_iteration_csv(std::ostream& out, const ExperimentSummary& summary);

/// Columns: <value_column>,cum_fraction. Censored repetitions keep the last
/// fraction below 1.
void write_cdf_csv(std::ostream& out, const Cdf& cdf, const std::string& value_column);

/// Columns: iteration,historic_plain_j,historic_similarity_j,improvement_ratio.
void write_ratio_csv(std::ostream& out, const ExperimentSummary& plain,
                     const ExperimentSummary& with_similarity);

/// Resolved config, per-repetition seeds, oracle and headline statistics.
/// Deterministic: contains no clocks or environment state.
void write_manifest(std::ostream& out, const ExperimentConfig& config,
                    const ExperimentSummary& summary);

/// Writes iterations.csv, optimal_iteration_cdf.csv, all_explored_cdf.csv and
/// manifest.json into directory `dir` (created if missing). With
/// json_mirrors, also writes results.json carrying the same series.
void write_experiment_outputs(const std::filesystem::path& dir, const ExperimentConfig& config,
                              const ExperimentSummary& summary, bool json_mirrors = false);

}  // namespace ringhop
