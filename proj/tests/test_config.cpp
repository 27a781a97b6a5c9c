#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringhop/config.hpp"
#include "ringhop/output.hpp"

using namespace ringhop;

namespace {

const char* kMinimalConfig = R"({
  "network": { "rings": 3, "children_ratio": 2 },
  "policy": { "algorithm": "egreedy" }
})";

}  // namespace

TEST_CASE("defaults resolve as documented") {
    const ExperimentConfig config = parse_config(kMinimalConfig, "");
    CHECK(config.scenario.packet.payload_bytes == 15);
    CHECK(config.scenario.packet.header_bytes == 2);
    CHECK(config.scenario.packet.packet_bytes == 65);
    CHECK(config.scenario.packet.max_payloads_per_packet == 4);
    CHECK(config.scenario.profile.supply_volts == 3.0);
    CHECK(config.scenario.link.tx_gain_dbi == 0.0);
    CHECK(config.scenario.link.rx_gain_dbi == 3.0);
    CHECK(config.scenario.link.frequency_hz == 868e6);
    CHECK(config.scenario.branches == 1);
    CHECK(config.scenario.spreading == Spreading::Equidistant);
    CHECK_FALSE(config.scenario.max_distance_m.has_value());  // auto
    CHECK(config.run.repetitions == 1);

    // Auto distance resolves to the radio's maximum range.
    const NetworkStructure net = build_scenario_network(config.scenario);
    CHECK(net.max_distance_m() ==
          max_range_m(config.scenario.profile, config.scenario.link));
}

TEST_CASE("missing policy keys are named") {
    try {
        parse_config(R"({"network": {"rings": 3, "children_ratio": 2}, "policy": {}})", "");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.field()).find("algorithm") != std::string::npos);
    }

    try {
        parse_config(R"({"network": {"rings": 3, "children_ratio": 2}})", "");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.field()).find("algorithm") != std::string::npos);
    }
}

TEST_CASE("profile with no power levels is rejected") {
    const char* text = R"({
      "network": { "rings": 3, "children_ratio": 2 },
      "radio": { "profile": { "rx_current_ma": 19.0, "power_levels": [],
                 "rate_levels": [ {"bps": 1200, "sensitivity_dbm": -120} ] } },
      "policy": { "algorithm": "egreedy" }
    })";
    CHECK_THROWS_AS(parse_config(text, ""), ValidationError);
}

TEST_CASE("out-of-range values are named") {
    const char* text = R"({
      "network": { "rings": 3, "children_ratio": 2 },
      "policy": { "algorithm": "egreedy", "epsilon_initial": 1.5 }
    })";
    try {
        parse_config(text, "");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.field()).find("epsilon") != std::string::npos);
    }

    CHECK_THROWS_AS(
        parse_config(R"({"network": {"rings": 3, "children_ratio": 2},
                      "policy": {"algorithm": "egreedy"}, "run": {"iterations": 0}})",
                     ""),
        ValidationError);
}

TEST_CASE("unknown keys are rejected") {
    CHECK_THROWS_AS(
        parse_config(R"({"network": {"rings": 3, "children_ratio": 2, "typo": 1},
                      "policy": {"algorithm": "egreedy"}})",
                     ""),
        ValidationError);
}

TEST_CASE("resolved configs round-trip exactly") {
    ExperimentConfig config = parse_config(kMinimalConfig, "");
    const std::string text = to_json_string(config);
    const ExperimentConfig reloaded = parse_config(text, "");
    CHECK(config_equal(config, reloaded));
    CHECK(to_json_string(reloaded) == text);

    ExperimentConfig explicit_distance = preset("r4c8");
    explicit_distance.scenario.max_distance_m = 1234.5;
    const ExperimentConfig reloaded2 = parse_config(to_json_string(explicit_distance), "");
    CHECK(config_equal(explicit_distance, reloaded2));
}

TEST_CASE("presets cover the documented grid") {
    const auto names = preset_names();
    CHECK(names.size() == 22);  // 5 ring counts x 4 ratios + two aliases
    for (int rings = 3; rings <= 7; ++rings) {
        for (int c : {1, 2, 3, 8}) {
            const std::string name = "r" + std::to_string(rings) + "c" + std::to_string(c);
            CHECK(is_preset(name));
            const ExperimentConfig config = preset(name);
            CHECK(config.scenario.rings == rings);
            CHECK(config.scenario.children_ratio == c);
            CHECK(config.scenario.branches == 1);
            CHECK(config.run.repetitions == 1000);
        }
    }
    CHECK(preset("E").scenario.rings == 4);
    CHECK(preset("E").scenario.children_ratio == 8);
    CHECK(preset("N").scenario.rings == 7);
    CHECK(preset("N").scenario.children_ratio == 3);
    CHECK_THROWS_AS(preset("r9c9"), ValidationError);
    CHECK_THROWS_AS(preset("bogus"), ValidationError);
}

TEST_CASE("profile files load through references") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ringhop_config_test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "radio.json");
        out << profile_to_json_string(default_cc1200_profile());
    }
    {
        std::ofstream out(dir / "experiment.json");
        out << R"({
          "network": { "rings": 3, "children_ratio": 2 },
          "radio": { "profile": "radio.json" },
          "policy": { "algorithm": "egreedy" }
        })";
    }
    const ExperimentConfig config = load_config(dir / "experiment.json");
    CHECK(config.scenario.profile.name == "cc1200-868");
    CHECK(config.scenario.profile.power_levels.size() ==
          default_cc1200_profile().power_levels.size());
    fs::remove_all(dir);
}

TEST_CASE("policy strings parse and print") {
    const PolicyConfig a = parse_policy("egreedy,eps=0.2,eps_sched=constant");
    CHECK_FALSE(a.similarity_enabled);
    CHECK(a.epsilon.initial == 0.2);
    CHECK(a.epsilon.kind == ScheduleKind::Constant);

    const PolicyConfig b = parse_policy(
        "egreedy-similarity,epsilon_initial=1,epsilon_schedule=quadratic,"
        "epsilon_s_initial=0.5,epsilon_s_schedule=quadratic,similarity_semantics=definition");
    CHECK(b.similarity_enabled);
    CHECK(b.epsilon_s.initial == 0.5);
    CHECK(b.semantics == SimilaritySemantics::Definition);

    CHECK(parse_policy(policy_to_string(b)) == b);
    CHECK_THROWS_AS(parse_policy("ucb"), ValidationError);
    CHECK_THROWS_AS(parse_policy("egreedy,eps=abc"), ValidationError);
    CHECK_THROWS_AS(parse_policy("egreedy,bogus=1"), ValidationError);
}

TEST_CASE("emitted CSVs parse back") {
    ExperimentConfig config = preset("r3c2");
    config.run.repetitions = 20;
    config.run.iterations = 15;
    const ExperimentSummary summary = run_experiment(config);

    std::ostringstream csv;
    write_iteration_csv(csv, summary);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line ==
          "iteration,mean_bottleneck_j,mean_historic_bottleneck_j,std_historic_bottleneck_j");
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string field;
        std::getline(fields, field, ',');
        CHECK(std::stoll(field) == rows + 1);
        std::getline(fields, field, ',');
        const double mean_eb = std::stod(field);
        std::getline(fields, field, ',');
        const double mean_hist = std::stod(field);
        std::getline(fields, field, ',');
        const double std_hist = std::stod(field);
        const IterationAggregate& agg = summary.per_iteration[static_cast<std::size_t>(rows)];
        // %.12e keeps 13 significant digits.
        CHECK(mean_eb == doctest::Approx(agg.mean_bottleneck_j).epsilon(1e-12));
        CHECK(mean_hist == doctest::Approx(agg.mean_historic_j).epsilon(1e-12));
        CHECK(std_hist == doctest::Approx(agg.std_historic_j).epsilon(1e-12));
        ++rows;
    }
    CHECK(rows == 15);
}

TEST_CASE("report CSV lists the gateway and every ring") {
    ExperimentConfig config = preset("r3c2");
    const NetworkStructure net = build_scenario_network(config.scenario);
    const EnergyReport report =
        evaluate_action(net, HopsCombination::single_hop(3), config.scenario.profile,
                        config.scenario.link, config.scenario.packet);
    std::ostringstream csv;
    write_report_csv(csv, report);

    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "action,ring,e_tx_j,e_rx_j,e_total_j,bottleneck_ring,bottleneck_j");
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.find("(1 2 3)") == 0);
        ++rows;
    }
    CHECK(rows == 4);  // gateway plus three rings
}
