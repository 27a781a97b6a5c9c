#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ringhop/experiment.hpp"

namespace ringhop {

/// Environment variable consulted (after the config file's own directory)
/// when resolving relative config and profile paths.
inline constexpr const char* kConfigDirEnvVar = "RINGHOP_CONFIG_DIR";

/// Sample radio: nominal power/rate tables transcribed from the TI CC1200
/// datasheet (868 MHz band).
TransceiverProfile default_cc1200_profile();

/// Sample channel: outdoor pico/hot-zone log-distance model for sub-GHz
/// 802.11ah-class deployments, PL(d) = 23.3 + 37.6 log10(d), with 0 dBi TX
/// and 3 dBi RX antenna gains at 868 MHz.
LinkBudgetModel default_link_model();

/// 15-byte payloads with 2-byte headers in fixed 65-byte packets carrying up
/// to 4 payloads.
PacketModel default_packet_model();

/// Loads a JSON experiment config (sections: network, radio, packet, policy,
/// run) and resolves every default, including an automatic max distance.
/// Throws ValidationError naming the offending field.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Parses a config from a JSON string; base_dir anchors relative profile
/// references ("" = current directory).
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir);

/// Serializes a fully resolved config; parse_config(to_json_string(c))
/// reproduces c exactly.
std::string to_json_string(const ExperimentConfig& config);
void save_config(const ExperimentConfig& config, const std::filesystem::path& path);

TransceiverProfile load_profile(const std::filesystem::path& path);
std::string profile_to_json_string(const TransceiverProfile& profile);

bool config_equal(const ExperimentConfig& a, const ExperimentConfig& b);

/// Built-in scenario presets: the grid rRcC for R in 3..7 and C in
/// {1, 2, 3, 8}, plus the aliases E (r4c8) and N (r7c3). One branch,
/// automatic max distance, sample radio and packet model.
std::vector<std::string> preset_names();
bool is_preset(std::string_view name);
ExperimentConfig preset(std::string_view name);

/// Parses a policy string such as
///   "egreedy,epsilon_initial=0.2,epsilon_schedule=quadratic"
///   "egreedy-similarity,eps=1,eps_sched=quadratic,eps_s=1,eps_s_sched=quadratic"
/// Accepted keys: epsilon_initial/eps, epsilon_schedule/eps_sched,
/// epsilon_s_initial/eps_s, epsilon_s_schedule/eps_s_sched,
/// similarity_semantics/semantics.
PolicyConfig parse_policy(std::string_view text);
std::string policy_to_string(const PolicyConfig& policy);

}  // namespace ringhop
