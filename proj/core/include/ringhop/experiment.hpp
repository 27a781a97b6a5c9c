#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringhop/bandit.hpp"
#include "ringhop/energy.hpp"

namespace ringhop {

/// Everything that defines the physical scenario. max_distance_m left empty
/// resolves to the radio's maximum range at (max power, min rate).
struct ScenarioSpec {
    std::string name = "custom";
    int rings = 0;
    int children_ratio = 0;
    int branches = 1;
    std::optional<double> max_distance_m;
    Spreading spreading = Spreading::Equidistant;
    TransceiverProfile profile;
    LinkBudgetModel link;
    PacketModel packet;

    void validate() const;
};

/// Builds the network, resolving an automatic max distance to max_range_m.
NetworkStructure build_scenario_network(const ScenarioSpec& scenario);

struct RunConfig {
    std::int64_t iterations = 500;
    int repetitions = 1;
    std::uint64_t seed_base = 1;

    void validate() const;

    bool operator==(const RunConfig&) const = default;
};

struct ExperimentConfig {
    ScenarioSpec scenario;
    PolicyConfig policy;
    RunConfig run;
};

/// Identifies what an experiment measured, for cross-run comparisons.
struct ScenarioFingerprint {
    int rings = 0;
    int children_ratio = 0;
    int branches = 0;
    double max_distance_m = 0.0;
    std::string profile_name;
    PacketModel packet;
    std::int64_t iterations = 0;

    bool operator==(const ScenarioFingerprint&) const = default;
};

/// Full trace of one repetition. Iteration i lives at index i-1.
struct RepetitionLog {
    std::uint64_t seed = 0;
    std::vector<std::size_t> actions;
    std::vector<double> rewards;
    std::vector<double> bottleneck_j;          // e_b of the chosen action
    std::vector<double> historic_bottleneck_j; // running max of ring ledgers
    std::vector<double> ring_cumulative_j;     // rings x iterations, row-major
    std::int64_t optimal_iteration = -1;       // -1 == never found
    std::int64_t all_explored_iteration = -1;  // -1 == never completed
    std::int64_t infeasible_rounds = 0;

    double ring_cumulative(int ring, std::int64_t iteration, std::int64_t iterations) const {
        return ring_cumulative_j[static_cast<std::size_t>(ring - 1) *
                                     static_cast<std::size_t>(iterations) +
                                 static_cast<std::size_t>(iteration - 1)];
    }
};

/// Cumulated energy of the most-consuming ring through iteration i.
double historic_bottleneck(const RepetitionLog& log, std::int64_t iteration);

struct IterationAggregate {
    double mean_bottleneck_j = 0.0;
    double mean_historic_j = 0.0;
    double std_historic_j = 0.0;  // unbiased; 0 for a single repetition
};

/// Empirical CDF over per-repetition iteration counts. Censored repetitions
/// (sentinel -1) stay in the denominator, so the last point may sit below 1.
struct Cdf {
    std::vector<std::pair<std::int64_t, double>> points;  // (value, fraction <= value)
    std::int64_t censored = 0;
    std::int64_t total = 0;
};

Cdf empirical_cdf(const std::vector<std::int64_t>& samples);

struct ExperimentSummary {
    ScenarioFingerprint fingerprint;
    std::vector<IterationAggregate> per_iteration;   // index i-1 holds iteration i
    std::vector<std::int64_t> optimal_iterations;    // per repetition, -1 censored
    std::vector<std::int64_t> all_explored_iterations;
    std::vector<std::int64_t> infeasible_rounds;     // per repetition
    std::size_t oracle_index = 0;
    HopsCombination oracle_action;
    double oracle_bottleneck_j = 0.0;

    double mean_optimal_iteration() const;      // over non-censored repetitions
    double mean_all_explored_iteration() const;
    std::int64_t iterations() const { return fingerprint.iterations; }
    int repetitions() const { return static_cast<int>(optimal_iterations.size()); }
};

struct DistributionStats {
    std::vector<IterationAggregate> per_iteration;
    Cdf optimal_iteration;
    Cdf all_explored_iteration;
};

DistributionStats distribution_stats(const ExperimentSummary& summary);

/// Historic-bottleneck improvement ratio at iteration i between a plain run
/// and a similarity run of the same scenario: values above 1 mean the
/// similarity run consumed less. Throws std::invalid_argument when the two
/// summaries measured different scenarios.
double similarity_ratio(const ExperimentSummary& plain, const ExperimentSummary& with_similarity,
                        std::int64_t iteration);

using RepetitionObserver = std::function<void(const RepetitionLog&)>;

/// Runs seeded repetitions (seed_base + repetition index) and aggregates the
/// per-iteration metrics. Every ring pays its energy for the chosen action
/// each round; re-chosen actions are re-charged but not re-evaluated. The
/// evaluator must be bound to the same scenario the config describes.
ExperimentSummary run_experiment(const ExperimentConfig& config, ScenarioEvaluator& evaluator,
                                 const RepetitionObserver& observer = {});

/// Convenience overload owning a freshly built evaluator.
ExperimentSummary run_experiment(const ExperimentConfig& config,
                                 const RepetitionObserver& observer = {});

}  // namespace ringhop
