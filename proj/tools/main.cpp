// ringhop CLI: enumerate routing actions, evaluate and optimize their energy
// cost, and run seeded learning experiments over scenario presets or config
// files. Exit codes: 0 success, 2 usage/validation error, 3 infeasible
// configuration.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ringhop/config.hpp"
#include "ringhop/output.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct ScenarioArgs {
    std::string preset_name;
    std::string config_path;

    void attach(CLI::App* cmd) {
        auto* preset_opt =
            cmd->add_option("--scenario", preset_name,
                            "Scenario preset name (see `ringhop presets`)");
        auto* config_opt = cmd->add_option("--config", config_path,
                                           "Path to a JSON experiment config");
        preset_opt->excludes(config_opt);
    }

    ringhop::ExperimentConfig resolve() const {
        if (!preset_name.empty()) return ringhop::preset(preset_name);
        if (!config_path.empty()) {
            namespace fs = std::filesystem;
            fs::path path(config_path);
            if (!fs::exists(path) && !path.is_absolute()) {
                if (const char* dir = std::getenv(ringhop::kConfigDirEnvVar)) {
                    const fs::path candidate = fs::path(dir) / path;
                    if (fs::exists(candidate)) path = candidate;
                }
            }
            return ringhop::load_config(path);
        }
        throw ringhop::ValidationError("scenario", "give --scenario or --config");
    }
};

struct RunOverrides {
    std::optional<std::int64_t> iterations;
    std::optional<int> repetitions;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App* cmd) {
        cmd->add_option("--iterations,-i", iterations, "Iterations per repetition");
        cmd->add_option("--reps,-k", repetitions, "Number of seeded repetitions");
        cmd->add_option("--seed,-z", seed, "Seed base (overrides the config seed)");
    }

    void apply(ringhop::ExperimentConfig& config) const {
        if (iterations) config.run.iterations = *iterations;
        if (repetitions) config.run.repetitions = *repetitions;
        if (seed) config.run.seed_base = *seed;
    }
};

void print_summary_line(const ringhop::ExperimentSummary& summary) {
    std::cout << "oracle_action=" << summary.oracle_action.to_string()
              << " oracle_bottleneck_j=" << ringhop::format_sci(summary.oracle_bottleneck_j)
              << " final_mean_historic_j="
              << ringhop::format_sci(summary.per_iteration.back().mean_historic_j) << '\n';
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Energy-optimal uplink routing for ring LPWAN trees"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Count (and list) routing actions");
    int enum_rings = 0;
    bool enum_list = false;
    enumerate->add_option("--rings,-r", enum_rings, "Ring count")->required();
    enumerate->add_flag("--list", enum_list, "Also print every action");

    // presets
    auto* presets = app.add_subcommand("presets", "List scenario preset names");

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Energy report of one action");
    ScenarioArgs eval_scenario;
    eval_scenario.attach(evaluate);
    std::string eval_action;
    evaluate->add_option("--action,-a", eval_action, "Action, e.g. \"(1 2 2)\"")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force optimal action and its report");
    ScenarioArgs oracle_scenario;
    oracle_scenario.attach(oracle);

    // learn
    auto* learn = app.add_subcommand("learn", "Run a seeded learning experiment");
    ScenarioArgs learn_scenario;
    learn_scenario.attach(learn);
    RunOverrides learn_run;
    learn_run.attach(learn);
    std::string learn_policy;
    std::string learn_out;
    bool learn_json = false;
    learn->add_option("--policy,-p", learn_policy,
                      "Policy string, e.g. egreedy,eps=0.5,eps_sched=constant");
    learn->add_option("--out,-o", learn_out, "Output directory for CSVs")->required();
    learn->add_flag("--json", learn_json, "Also write JSON mirrors of the CSVs");

    // compare
    auto* compare = app.add_subcommand(
        "compare", "Improvement ratio between two policies on one scenario");
    ScenarioArgs compare_scenario;
    compare_scenario.attach(compare);
    RunOverrides compare_run;
    compare_run.attach(compare);
    std::string policy_a;
    std::string policy_b;
    std::string compare_out;
    compare->add_option("--policy-a", policy_a, "Baseline policy string")->required();
    compare->add_option("--policy-b", policy_b, "Candidate policy string")->required();
    compare->add_option("--out,-o", compare_out, "Directory for similarity_ratio.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (enumerate->parsed()) {
        const ringhop::ActionSpace space = ringhop::enumerate_actions(enum_rings);
        std::cout << space.size() << '\n';
        if (enum_list) {
            for (const auto& action : space.actions()) {
                std::cout << action.to_string() << '\n';
            }
        }
        return kExitOk;
    }

    if (presets->parsed()) {
        for (const std::string& name : ringhop::preset_names()) {
            std::cout << name << '\n';
        }
        return kExitOk;
    }

    if (evaluate->parsed()) {
        const ringhop::ExperimentConfig config = eval_scenario.resolve();
        const ringhop::HopsCombination action = ringhop::HopsCombination::parse(eval_action);
        const ringhop::NetworkStructure net = ringhop::build_scenario_network(config.scenario);
        const ringhop::EnergyReport report = ringhop::evaluate_action(
            net, action, config.scenario.profile, config.scenario.link,
            config.scenario.packet);
        ringhop::write_report_csv(std::cout, report);
        return kExitOk;
    }

    if (oracle->parsed()) {
        const ringhop::ExperimentConfig config = oracle_scenario.resolve();
        const ringhop::NetworkStructure net = ringhop::build_scenario_network(config.scenario);
        const auto [action, report] = ringhop::brute_force_optimal(
            net, config.scenario.profile, config.scenario.link, config.scenario.packet);
        ringhop::write_report_csv(std::cout, report);
        return kExitOk;
    }

    if (learn->parsed()) {
        ringhop::ExperimentConfig config = learn_scenario.resolve();
        if (!learn_policy.empty()) config.policy = ringhop::parse_policy(learn_policy);
        learn_run.apply(config);
        const ringhop::ExperimentSummary summary = ringhop::run_experiment(config);
        ringhop::write_experiment_outputs(learn_out, config, summary, learn_json);
        print_summary_line(summary);
        return kExitOk;
    }

    if (compare->parsed()) {
        ringhop::ExperimentConfig config = compare_scenario.resolve();
        compare_run.apply(config);
        ringhop::ExperimentConfig config_a = config;
        config_a.policy = ringhop::parse_policy(policy_a);
        ringhop::ExperimentConfig config_b = config;
        config_b.policy = ringhop::parse_policy(policy_b);

        // One shared evaluator: both runs see identical memoized reports.
        ringhop::ScenarioEvaluator evaluator(
            ringhop::build_scenario_network(config.scenario), config.scenario.profile,
            config.scenario.link, config.scenario.packet);
        const ringhop::ExperimentSummary summary_a =
            ringhop::run_experiment(config_a, evaluator);
        const ringhop::ExperimentSummary summary_b =
            ringhop::run_experiment(config_b, evaluator);

        if (!compare_out.empty()) {
            std::filesystem::create_directories(compare_out);
            std::ofstream out(std::filesystem::path(compare_out) / "similarity_ratio.csv",
                              std::ios::binary);
            ringhop::write_ratio_csv(out, summary_a, summary_b);
        }
        const std::int64_t last = summary_a.iterations();
        std::cout << "improvement_ratio_final="
                  << ringhop::format_sci(
                         ringhop::similarity_ratio(summary_a, summary_b, last))
                  << '\n';
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ringhop::InfeasibleActionError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ringhop::InfeasibleLinkError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ringhop::ConfigurationError& e) {
        std::cerr << "infeasible configuration: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ringhop::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ringhop::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
