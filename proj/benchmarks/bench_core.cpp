#include <benchmark/benchmark.h>

#include "ringhop/config.hpp"
#include "ringhop/experiment.hpp"

namespace {

using namespace ringhop;

void BM_EnumerateActions(benchmark::State& state) {
    const int rings = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ActionSpace space = enumerate_actions(rings);
        benchmark::DoNotOptimize(space.size());
    }
    state.SetLabel(std::to_string(enumerate_actions(rings).size()) + " actions");
}
BENCHMARK(BM_EnumerateActions)->Arg(4)->Arg(7)->Arg(9);

void BM_EvaluateAction(benchmark::State& state) {
    const ExperimentConfig config = preset("r7c3");
    const NetworkStructure net = build_scenario_network(config.scenario);
    const HopsCombination action = HopsCombination::next_ring_hop(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_action(net, action, config.scenario.profile,
                                                 config.scenario.link,
                                                 config.scenario.packet));
    }
}
BENCHMARK(BM_EvaluateAction);

void BM_BruteForceOracle(benchmark::State& state) {
    const ExperimentConfig config = preset("r5c2");
    const NetworkStructure net = build_scenario_network(config.scenario);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_optimal(net, config.scenario.profile,
                                                     config.scenario.link,
                                                     config.scenario.packet));
    }
}
BENCHMARK(BM_BruteForceOracle);

void BM_LearnerSteps(benchmark::State& state) {
    ExperimentConfig config = preset("r4c8");
    config.policy.epsilon = {ScheduleKind::QuadraticDecreasing, 1.0};
    ScenarioEvaluator evaluator(build_scenario_network(config.scenario),
                                config.scenario.profile, config.scenario.link,
                                config.scenario.packet);
    const auto env = [&](std::size_t i) { return evaluator.reward_or_zero(i); };
    for (auto _ : state) {
        EpsilonGreedyLearner learner(evaluator.space(), config.policy, 7);
        for (int i = 0; i < 500; ++i) learner.step(env);
        benchmark::DoNotOptimize(learner.best_action());
    }
    state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(BM_LearnerSteps);

void BM_Repetition(benchmark::State& state) {
    ExperimentConfig config = preset("r4c8");
    config.run.repetitions = 1;
    config.run.iterations = 500;
    ScenarioEvaluator evaluator(build_scenario_network(config.scenario),
                                config.scenario.profile, config.scenario.link,
                                config.scenario.packet);
    evaluator.optimal();  // warm the memo outside the timed region
    std::uint64_t seed = 1;
    for (auto _ : state) {
        config.run.seed_base = seed++;
        benchmark::DoNotOptimize(run_experiment(config, evaluator));
    }
}
BENCHMARK(BM_Repetition);

}  // namespace

BENCHMARK_MAIN();
