#include "ringhop/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ringhop {

void ScenarioSpec::validate() const {
    if (rings < 1) throw ValidationError("network.rings", "must be >= 1");
    if (children_ratio < 1) throw ValidationError("network.children_ratio", "must be >= 1");
    if (branches < 1) throw ValidationError("network.branches", "must be >= 1");
    if (max_distance_m && !(*max_distance_m > 0.0)) {
        throw ValidationError("network.max_distance_m", "must be > 0");
    }
    profile.validate();
    link.validate();
    packet.validate();
}

NetworkStructure build_scenario_network(const ScenarioSpec& scenario) {
    scenario.validate();
    const double d = scenario.max_distance_m ? *scenario.max_distance_m
                                             : max_range_m(scenario.profile, scenario.link);
    return NetworkStructure(scenario.rings, scenario.children_ratio, scenario.branches, d,
                            scenario.spreading);
}

void RunConfig::validate() const {
    if (iterations < 1) throw ValidationError("run.iterations", "must be >= 1");
    if (repetitions < 1) throw ValidationError("run.repetitions", "must be >= 1");
}

double historic_bottleneck(const RepetitionLog& log, std::int64_t iteration) {
    if (iteration < 1 || iteration > static_cast<std::int64_t>(log.historic_bottleneck_j.size())) {
        throw std::out_of_range("iteration out of range");
    }
    return log.historic_bottleneck_j[static_cast<std::size_t>(iteration - 1)];
}

Cdf empirical_cdf(const std::vector<std::int64_t>& samples) {
    Cdf cdf;
    cdf.total = static_cast<std::int64_t>(samples.size());
    std::vector<std::int64_t> finite;
    finite.reserve(samples.size());
    for (std::int64_t v : samples) {
        if (v < 0) {
            ++cdf.censored;
        } else {
            finite.push_back(v);
        }
    }
    std::sort(finite.begin(), finite.end());
    std::int64_t seen = 0;
    for (std::size_t i = 0; i < finite.size(); ++i) {
        ++seen;
        const bool last_of_value = i + 1 == finite.size() || finite[i + 1] != finite[i];
        if (last_of_value) {
            cdf.points.emplace_back(finite[i],
                                    static_cast<double>(seen) / static_cast<double>(cdf.total));
        }
    }
    return cdf;
}

double ExperimentSummary::mean_optimal_iteration() const {
    double sum = 0.0;
    std::int64_t n = 0;
    for (std::int64_t v : optimal_iterations) {
        if (v >= 0) {
            sum += static_cast<double>(v);
            ++n;
        }
    }
    return n > 0 ? sum / static_cast<double>(n) : std::nan("");
}

double ExperimentSummary::mean_all_explored_iteration() const {
    double sum = 0.0;
    std::int64_t n = 0;
    for (std::int64_t v : all_explored_iterations) {
        if (v >= 0) {
            sum += static_cast<double>(v);
            ++n;
        }
    }
    return n > 0 ? sum / static_cast<double>(n) : std::nan("");
}

DistributionStats distribution_stats(const ExperimentSummary& summary) {
    DistributionStats stats;
    stats.per_iteration = summary.per_iteration;
    stats.optimal_iteration = empirical_cdf(summary.optimal_iterations);
    stats.all_explored_iteration = empirical_cdf(summary.all_explored_iterations);
    return stats;
}

double similarity_ratio(const ExperimentSummary& plain, const ExperimentSummary& with_similarity,
                        std::int64_t iteration) {
    if (!(plain.fingerprint == with_similarity.fingerprint)) {
        throw std::invalid_argument(
            "similarity ratio requires runs of the same scenario and iteration count");
    }
    if (iteration < 1 || iteration > plain.iterations()) {
        throw std::out_of_range("iteration out of range");
    }
    const std::size_t i = static_cast<std::size_t>(iteration - 1);
    return plain.per_iteration[i].mean_historic_j /
           with_similarity.per_iteration[i].mean_historic_j;
}

ExperimentSummary run_experiment(const ExperimentConfig& config, ScenarioEvaluator& evaluator,
                                 const RepetitionObserver& observer) {
    config.run.validate();
    config.policy.validate();

    const NetworkStructure& net = evaluator.network();
    const ActionSpace& space = evaluator.space();
    const std::int64_t iterations = config.run.iterations;
    const int repetitions = config.run.repetitions;
    const int rings = net.rings();

    ExperimentSummary summary;
    summary.fingerprint = ScenarioFingerprint{net.rings(),
                                              net.children_ratio(),
                                              net.branches(),
                                              net.max_distance_m(),
                                              config.scenario.profile.name,
                                              config.scenario.packet,
                                              iterations};
    const auto [oracle_index, oracle_eb] = evaluator.optimal();
    summary.oracle_index = oracle_index;
    summary.oracle_action = space.action(oracle_index);
    summary.oracle_bottleneck_j = oracle_eb;

    std::vector<double> sum_eb(static_cast<std::size_t>(iterations), 0.0);
    std::vector<double> sum_hist(static_cast<std::size_t>(iterations), 0.0);
    std::vector<double> sumsq_hist(static_cast<std::size_t>(iterations), 0.0);

    const auto env = [&evaluator](std::size_t index) {
        return evaluator.reward_or_zero(index);
    };

    RepetitionLog log;
    std::vector<double> ring_cum(static_cast<std::size_t>(rings), 0.0);
    const bool keep_matrix = static_cast<bool>(observer);

    for (int rep = 0; rep < repetitions; ++rep) {
        const std::uint64_t seed = config.run.seed_base + static_cast<std::uint64_t>(rep);
        EpsilonGreedyLearner learner(space, config.policy, seed);

        log.seed = seed;
        log.actions.assign(static_cast<std::size_t>(iterations), 0);
        log.rewards.assign(static_cast<std::size_t>(iterations), 0.0);
        log.bottleneck_j.assign(static_cast<std::size_t>(iterations), 0.0);
        log.historic_bottleneck_j.assign(static_cast<std::size_t>(iterations), 0.0);
        if (keep_matrix) {
            log.ring_cumulative_j.assign(
                static_cast<std::size_t>(rings) * static_cast<std::size_t>(iterations), 0.0);
        }
        log.optimal_iteration = -1;
        log.infeasible_rounds = 0;
        std::fill(ring_cum.begin(), ring_cum.end(), 0.0);

        for (std::int64_t it = 1; it <= iterations; ++it) {
            const auto result = learner.step(env);
            const std::size_t idx = static_cast<std::size_t>(it - 1);
            log.actions[idx] = result.action_index;
            log.rewards[idx] = result.reward;

            const EnergyReport* report = evaluator.report_if_feasible(result.action_index);
            double eb = 0.0;
            if (report) {
                for (int r = 1; r <= rings; ++r) {
                    ring_cum[static_cast<std::size_t>(r - 1)] += report->ring_total_j(r);
                }
                eb = report->bottleneck_j;
            } else {
                ++log.infeasible_rounds;
            }
            log.bottleneck_j[idx] = eb;

            double hist = ring_cum[0];
            for (int r = 2; r <= rings; ++r) {
                hist = std::max(hist, ring_cum[static_cast<std::size_t>(r - 1)]);
            }
            log.historic_bottleneck_j[idx] = hist;
            if (keep_matrix) {
                for (int r = 1; r <= rings; ++r) {
                    log.ring_cumulative_j[static_cast<std::size_t>(r - 1) *
                                              static_cast<std::size_t>(iterations) +
                                          idx] = ring_cum[static_cast<std::size_t>(r - 1)];
                }
            }
            // Memoized evaluation makes equality with the oracle's e_b exact.
            if (log.optimal_iteration < 0 && report && eb == oracle_eb) {
                log.optimal_iteration = it;
            }

            sum_eb[idx] += eb;
            sum_hist[idx] += hist;
            sumsq_hist[idx] += hist * hist;
        }
        log.all_explored_iteration = learner.all_explored_iteration();

        summary.optimal_iterations.push_back(log.optimal_iteration);
        summary.all_explored_iterations.push_back(log.all_explored_iteration);
        summary.infeasible_rounds.push_back(log.infeasible_rounds);
        if (observer) observer(log);
    }

    summary.per_iteration.resize(static_cast<std::size_t>(iterations));
    const double n = static_cast<double>(repetitions);
    for (std::size_t i = 0; i < summary.per_iteration.size(); ++i) {
        IterationAggregate& agg = summary.per_iteration[i];
        agg.mean_bottleneck_j = sum_eb[i] / n;
        agg.mean_historic_j = sum_hist[i] / n;
        if (repetitions > 1) {
            const double var =
                (sumsq_hist[i] - n * agg.mean_historic_j * agg.mean_historic_j) / (n - 1.0);
            agg.std_historic_j = var > 0.0 ? std::sqrt(var) : 0.0;
        }
    }
    return summary;
}

ExperimentSummary run_experiment(const ExperimentConfig& config,
                                 const RepetitionObserver& observer) {
    ScenarioEvaluator evaluator(build_scenario_network(config.scenario),
                                config.scenario.profile, config.scenario.link,
                                config.scenario.packet);
    return run_experiment(config, evaluator, observer);
}

}  // namespace ringhop
