#include "ringhop/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ringhop {

using nlohmann::json;

TransceiverProfile default_cc1200_profile() {
    TransceiverProfile p;
    p.name = "cc1200-868";
    p.supply_volts = 3.0;
    p.rx_current_ma = 19.0;
    p.power_levels = {
        {1, 14.0, 46.0}, {2, 12.0, 43.0}, {3, 10.0, 40.0},  {4, 8.0, 37.0},
        {5, 6.0, 34.0},  {6, 4.0, 31.5},  {7, 2.0, 29.5},   {8, 0.0, 28.0},
        {9, -3.0, 26.0}, {10, -6.0, 24.5}, {11, -11.0, 23.0}, {12, -16.0, 22.0},
    };
    p.rate_levels = {
        {1200.0, -123.0},   {4800.0, -118.0},  {9600.0, -115.0},  {38400.0, -110.0},
        {50000.0, -109.0},  {100000.0, -104.0}, {500000.0, -97.0}, {1000000.0, -91.0},
    };
    return p;
}

LinkBudgetModel default_link_model() {
    LinkBudgetModel m;
    m.intercept_db = 23.3;
    m.slope_db_per_decade = 37.6;
    m.frequency_hz = 868e6;
    m.tx_gain_dbi = 0.0;
    m.rx_gain_dbi = 3.0;
    return m;
}

PacketModel default_packet_model() { return PacketModel{15, 2, 65, 4}; }

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& reason) {
    throw ValidationError(field, reason);
}

void check_keys(const json& obj, const std::string& section,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) fail(section + "." + it.key(), "unknown key");
    }
}

double require_number(const json& obj, const std::string& section, const char* key) {
    if (!obj.contains(key)) fail(section + "." + key, "missing required key");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(section + "." + key, "must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const std::string& section, const char* key,
                 double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(section + "." + key, "must be a number");
    return v.get<double>();
}

std::int64_t integer_or(const json& obj, const std::string& section, const char* key,
                        std::int64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(section + "." + key, "must be an integer");
    return v.get<std::int64_t>();
}

std::string string_or(const json& obj, const std::string& section, const char* key,
                      const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) fail(section + "." + key, "must be a string");
    return v.get<std::string>();
}

TransceiverProfile profile_from_json(const json& j, const std::string& section) {
    if (!j.is_object()) fail(section, "must be an object");
    check_keys(j, section,
               {"name", "supply_volts", "rx_current_ma", "power_levels", "rate_levels"});
    TransceiverProfile p;
    p.name = string_or(j, section, "name", "unnamed");
    p.supply_volts = number_or(j, section, "supply_volts", 3.0);
    p.rx_current_ma = require_number(j, section, "rx_current_ma");
    if (!j.contains("power_levels") || !j.at("power_levels").is_array()) {
        fail(section + ".power_levels", "missing or not an array");
    }
    if (!j.contains("rate_levels") || !j.at("rate_levels").is_array()) {
        fail(section + ".rate_levels", "missing or not an array");
    }
    int level = 1;
    for (const json& e : j.at("power_levels")) {
        const std::string where = section + ".power_levels";
        check_keys(e, where, {"level", "dbm", "tx_current_ma"});
        PowerLevel pl;
        pl.level = static_cast<int>(integer_or(e, where, "level", level));
        pl.tx_power_dbm = require_number(e, where, "dbm");
        pl.tx_current_ma = require_number(e, where, "tx_current_ma");
        p.power_levels.push_back(pl);
        ++level;
    }
    for (const json& e : j.at("rate_levels")) {
        const std::string where = section + ".rate_levels";
        check_keys(e, where, {"bps", "sensitivity_dbm"});
        RateLevel rl;
        rl.bits_per_second = require_number(e, where, "bps");
        rl.sensitivity_dbm = require_number(e, where, "sensitivity_dbm");
        p.rate_levels.push_back(rl);
    }
    try {
        p.validate();
    } catch (const ValidationError& e) {
        fail(section + "." + e.field(), e.what());
    }
    return p;
}

json profile_to_json(const TransceiverProfile& p) {
    json j;
    j["name"] = p.name;
    j["supply_volts"] = p.supply_volts;
    j["rx_current_ma"] = p.rx_current_ma;
    j["power_levels"] = json::array();
    for (const PowerLevel& pl : p.power_levels) {
        j["power_levels"].push_back(
            {{"level", pl.level}, {"dbm", pl.tx_power_dbm}, {"tx_current_ma", pl.tx_current_ma}});
    }
    j["rate_levels"] = json::array();
    for (const RateLevel& rl : p.rate_levels) {
        j["rate_levels"].push_back(
            {{"bps", rl.bits_per_second}, {"sensitivity_dbm", rl.sensitivity_dbm}});
    }
    return j;
}

std::filesystem::path resolve_input_path(const std::filesystem::path& ref,
                                         const std::filesystem::path& base_dir) {
    namespace fs = std::filesystem;
    if (ref.is_absolute() || fs::exists(ref)) return ref;
    if (!base_dir.empty() && fs::exists(base_dir / ref)) return base_dir / ref;
    if (const char* dir = std::getenv(kConfigDirEnvVar)) {
        if (fs::exists(fs::path(dir) / ref)) return fs::path(dir) / ref;
    }
    return ref;  // let the caller report the open failure
}

ScheduleKind schedule_from_string(const std::string& s, const std::string& field) {
    if (s == "constant") return ScheduleKind::Constant;
    if (s == "quadratic") return ScheduleKind::QuadraticDecreasing;
    fail(field, "must be 'constant' or 'quadratic'");
}

std::string schedule_to_string(ScheduleKind kind) {
    return kind == ScheduleKind::Constant ? "constant" : "quadratic";
}

SimilaritySemantics semantics_from_string(const std::string& s, const std::string& field) {
    if (s == "results") return SimilaritySemantics::Results;
    if (s == "definition") return SimilaritySemantics::Definition;
    fail(field, "must be 'results' or 'definition'");
}

std::string semantics_to_string(SimilaritySemantics s) {
    return s == SimilaritySemantics::Results ? "results" : "definition";
}

PolicyConfig policy_from_json(const json& j) {
    check_keys(j, "policy",
               {"algorithm", "epsilon_initial", "epsilon_schedule", "epsilon_s_initial",
                "epsilon_s_schedule", "similarity_semantics"});
    if (!j.contains("algorithm")) fail("policy.algorithm", "missing required key");
    const std::string algorithm = j.at("algorithm").get<std::string>();
    PolicyConfig policy;
    if (algorithm == "egreedy") {
        policy.similarity_enabled = false;
    } else if (algorithm == "egreedy-similarity") {
        policy.similarity_enabled = true;
    } else {
        fail("policy.algorithm", "must be 'egreedy' or 'egreedy-similarity'");
    }
    policy.epsilon.initial = number_or(j, "policy", "epsilon_initial", 1.0);
    policy.epsilon.kind = schedule_from_string(
        string_or(j, "policy", "epsilon_schedule", "quadratic"), "policy.epsilon_schedule");
    policy.epsilon_s.initial = number_or(j, "policy", "epsilon_s_initial", 1.0);
    policy.epsilon_s.kind =
        schedule_from_string(string_or(j, "policy", "epsilon_s_schedule", "quadratic"),
                             "policy.epsilon_s_schedule");
    policy.semantics = semantics_from_string(
        string_or(j, "policy", "similarity_semantics", "results"),
        "policy.similarity_semantics");
    try {
        policy.validate();
    } catch (const ValidationError& e) {
        fail(std::string("policy.") + e.field(), e.what());
    }
    return policy;
}

json policy_to_json(const PolicyConfig& p) {
    json j;
    j["algorithm"] = p.similarity_enabled ? "egreedy-similarity" : "egreedy";
    j["epsilon_initial"] = p.epsilon.initial;
    j["epsilon_schedule"] = schedule_to_string(p.epsilon.kind);
    j["epsilon_s_initial"] = p.epsilon_s.initial;
    j["epsilon_s_schedule"] = schedule_to_string(p.epsilon_s.kind);
    j["similarity_semantics"] = semantics_to_string(p.semantics);
    return j;
}

ExperimentConfig config_from_json(const json& root, const std::filesystem::path& base_dir) {
    if (!root.is_object()) fail("config", "top level must be an object");
    check_keys(root, "config", {"network", "radio", "packet", "policy", "run"});

    ExperimentConfig config;

    const json network = root.value("network", json::object());
    check_keys(network, "network",
               {"rings", "children_ratio", "branches", "max_distance_m", "spreading"});
    config.scenario.name = "custom";
    config.scenario.rings =
        static_cast<int>(integer_or(network, "network", "rings", 0));
    if (config.scenario.rings < 1) fail("network.rings", "missing or < 1");
    config.scenario.children_ratio =
        static_cast<int>(integer_or(network, "network", "children_ratio", 0));
    if (config.scenario.children_ratio < 1) fail("network.children_ratio", "missing or < 1");
    config.scenario.branches =
        static_cast<int>(integer_or(network, "network", "branches", 1));
    if (network.contains("max_distance_m")) {
        const json& d = network.at("max_distance_m");
        if (d.is_string()) {
            if (d.get<std::string>() != "auto") {
                fail("network.max_distance_m", "must be a number or 'auto'");
            }
        } else if (d.is_number()) {
            config.scenario.max_distance_m = d.get<double>();
        } else {
            fail("network.max_distance_m", "must be a number or 'auto'");
        }
    }
    const std::string spreading = string_or(network, "network", "spreading", "equidistant");
    if (spreading != "equidistant") {
        fail("network.spreading", "only 'equidistant' is supported");
    }
    config.scenario.spreading = Spreading::Equidistant;

    const json radio = root.value("radio", json::object());
    check_keys(radio, "radio",
               {"path_loss", "frequency_hz", "tx_gain_dbi", "rx_gain_dbi", "profile"});
    config.scenario.link = default_link_model();
    if (radio.contains("path_loss")) {
        const json& pl = radio.at("path_loss");
        check_keys(pl, "radio.path_loss", {"intercept_db", "slope_db_per_decade"});
        config.scenario.link.intercept_db =
            require_number(pl, "radio.path_loss", "intercept_db");
        config.scenario.link.slope_db_per_decade =
            require_number(pl, "radio.path_loss", "slope_db_per_decade");
    }
    config.scenario.link.frequency_hz =
        number_or(radio, "radio", "frequency_hz", config.scenario.link.frequency_hz);
    config.scenario.link.tx_gain_dbi =
        number_or(radio, "radio", "tx_gain_dbi", config.scenario.link.tx_gain_dbi);
    config.scenario.link.rx_gain_dbi =
        number_or(radio, "radio", "rx_gain_dbi", config.scenario.link.rx_gain_dbi);
    try {
        config.scenario.link.validate();
    } catch (const ValidationError& e) {
        fail(std::string("radio.") + e.field(), e.what());
    }
    if (!radio.contains("profile")) {
        config.scenario.profile = default_cc1200_profile();
    } else if (radio.at("profile").is_string()) {
        const std::filesystem::path ref = radio.at("profile").get<std::string>();
        config.scenario.profile = load_profile(resolve_input_path(ref, base_dir));
    } else {
        config.scenario.profile = profile_from_json(radio.at("profile"), "radio.profile");
    }

    const json packet = root.value("packet", json::object());
    check_keys(packet, "packet",
               {"payload_bytes", "header_bytes", "packet_bytes", "max_payloads_per_packet"});
    const PacketModel defaults = default_packet_model();
    config.scenario.packet.payload_bytes = static_cast<int>(
        integer_or(packet, "packet", "payload_bytes", defaults.payload_bytes));
    config.scenario.packet.header_bytes =
        static_cast<int>(integer_or(packet, "packet", "header_bytes", defaults.header_bytes));
    config.scenario.packet.packet_bytes =
        static_cast<int>(integer_or(packet, "packet", "packet_bytes", defaults.packet_bytes));
    config.scenario.packet.max_payloads_per_packet = static_cast<int>(integer_or(
        packet, "packet", "max_payloads_per_packet", defaults.max_payloads_per_packet));
    config.scenario.packet.validate();

    if (!root.contains("policy")) fail("policy.algorithm", "missing required key");
    config.policy = policy_from_json(root.at("policy"));

    const json run = root.value("run", json::object());
    check_keys(run, "run", {"iterations", "repetitions", "seed_base"});
    config.run.iterations = integer_or(run, "run", "iterations", 500);
    config.run.repetitions = static_cast<int>(integer_or(run, "run", "repetitions", 1));
    config.run.seed_base =
        static_cast<std::uint64_t>(integer_or(run, "run", "seed_base", 1));
    config.run.validate();

    config.scenario.validate();
    return config;
}

json config_to_json(const ExperimentConfig& c) {
    json j;
    j["network"]["rings"] = c.scenario.rings;
    j["network"]["children_ratio"] = c.scenario.children_ratio;
    j["network"]["branches"] = c.scenario.branches;
    if (c.scenario.max_distance_m) {
        j["network"]["max_distance_m"] = *c.scenario.max_distance_m;
    } else {
        j["network"]["max_distance_m"] = "auto";
    }
    j["network"]["spreading"] = "equidistant";
    j["radio"]["path_loss"]["intercept_db"] = c.scenario.link.intercept_db;
    j["radio"]["path_loss"]["slope_db_per_decade"] = c.scenario.link.slope_db_per_decade;
    j["radio"]["frequency_hz"] = c.scenario.link.frequency_hz;
    j["radio"]["tx_gain_dbi"] = c.scenario.link.tx_gain_dbi;
    j["radio"]["rx_gain_dbi"] = c.scenario.link.rx_gain_dbi;
    j["radio"]["profile"] = profile_to_json(c.scenario.profile);
    j["packet"]["payload_bytes"] = c.scenario.packet.payload_bytes;
    j["packet"]["header_bytes"] = c.scenario.packet.header_bytes;
    j["packet"]["packet_bytes"] = c.scenario.packet.packet_bytes;
    j["packet"]["max_payloads_per_packet"] = c.scenario.packet.max_payloads_per_packet;
    j["policy"] = policy_to_json(c.policy);
    j["run"]["iterations"] = c.run.iterations;
    j["run"]["repetitions"] = c.run.repetitions;
    j["run"]["seed_base"] = c.run.seed_base;
    return j;
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config", "cannot open " + path.string());
    json root;
    try {
        root = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ValidationError("config", std::string("parse error: ") + e.what());
    }
    return config_from_json(root, path.parent_path());
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    json root;
    try {
        root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ValidationError("config", std::string("parse error: ") + e.what());
    }
    return config_from_json(root, base_dir);
}

std::string to_json_string(const ExperimentConfig& config) {
    return config_to_json(config).dump(2) + "\n";
}

void save_config(const ExperimentConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("config", "cannot write " + path.string());
    out << to_json_string(config);
}

TransceiverProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("radio.profile", "cannot open " + path.string());
    json j;
    try {
        j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ValidationError("radio.profile", std::string("parse error: ") + e.what());
    }
    return profile_from_json(j, "radio.profile");
}

std::string profile_to_json_string(const TransceiverProfile& profile) {
    return profile_to_json(profile).dump(2) + "\n";
}

bool config_equal(const ExperimentConfig& a, const ExperimentConfig& b) {
    return config_to_json(a) == config_to_json(b);
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (int rings = 3; rings <= 7; ++rings) {
        for (int c : {1, 2, 3, 8}) {
            names.push_back("r" + std::to_string(rings) + "c" + std::to_string(c));
        }
    }
    names.push_back("E");
    names.push_back("N");
    return names;
}

bool is_preset(std::string_view name) {
    for (const std::string& n : preset_names()) {
        if (n == name) return true;
    }
    return false;
}

ExperimentConfig preset(std::string_view name) {
    std::string resolved(name);
    if (resolved == "E") resolved = "r4c8";
    if (resolved == "N") resolved = "r7c3";
    if (resolved.size() < 4 || resolved[0] != 'r') {
        throw ValidationError("scenario", "unknown preset '" + std::string(name) + "'");
    }
    const std::size_t cpos = resolved.find('c');
    int rings = 0;
    int children = 0;
    try {
        rings = std::stoi(resolved.substr(1, cpos - 1));
        children = std::stoi(resolved.substr(cpos + 1));
    } catch (const std::exception&) {
        throw ValidationError("scenario", "unknown preset '" + std::string(name) + "'");
    }
    if (!is_preset(resolved)) {
        throw ValidationError("scenario", "unknown preset '" + std::string(name) + "'");
    }

    ExperimentConfig config;
    config.scenario.name = resolved;
    config.scenario.rings = rings;
    config.scenario.children_ratio = children;
    config.scenario.branches = 1;
    config.scenario.spreading = Spreading::Equidistant;
    config.scenario.profile = default_cc1200_profile();
    config.scenario.link = default_link_model();
    config.scenario.packet = default_packet_model();

    config.policy.similarity_enabled = false;
    config.policy.epsilon = {ScheduleKind::QuadraticDecreasing, 1.0};
    config.policy.epsilon_s = {ScheduleKind::QuadraticDecreasing, 1.0};

    // Larger action spaces get longer default horizons.
    static constexpr std::int64_t kIterations[] = {500, 500, 1000, 1500, 2000};
    config.run.iterations = kIterations[rings - 3];
    config.run.repetitions = 1000;
    config.run.seed_base = 1000;
    return config;
}

PolicyConfig parse_policy(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            tokens.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    tokens.push_back(current);
    if (tokens.empty() || tokens[0].empty()) fail("policy", "empty policy string");

    PolicyConfig policy;
    if (tokens[0] == "egreedy") {
        policy.similarity_enabled = false;
    } else if (tokens[0] == "egreedy-similarity") {
        policy.similarity_enabled = true;
    } else {
        fail("policy.algorithm", "must be 'egreedy' or 'egreedy-similarity'");
    }
    policy.epsilon = {ScheduleKind::QuadraticDecreasing, 1.0};
    policy.epsilon_s = {ScheduleKind::QuadraticDecreasing, 1.0};

    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& token = tokens[i];
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) fail("policy", "expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        try {
            if (key == "epsilon_initial" || key == "eps") {
                policy.epsilon.initial = std::stod(value);
            } else if (key == "epsilon_schedule" || key == "eps_sched") {
                policy.epsilon.kind = schedule_from_string(value, "policy.epsilon_schedule");
            } else if (key == "epsilon_s_initial" || key == "eps_s") {
                policy.epsilon_s.initial = std::stod(value);
            } else if (key == "epsilon_s_schedule" || key == "eps_s_sched") {
                policy.epsilon_s.kind =
                    schedule_from_string(value, "policy.epsilon_s_schedule");
            } else if (key == "similarity_semantics" || key == "semantics") {
                policy.semantics =
                    semantics_from_string(value, "policy.similarity_semantics");
            } else {
                fail("policy." + key, "unknown key");
            }
        } catch (const std::invalid_argument&) {
            fail("policy." + key, "malformed value '" + value + "'");
        }
    }
    try {
        policy.validate();
    } catch (const ValidationError& e) {
        fail(std::string("policy.") + e.field(), e.what());
    }
    return policy;
}

std::string policy_to_string(const PolicyConfig& policy) {
    std::ostringstream out;
    out << (policy.similarity_enabled ? "egreedy-similarity" : "egreedy");
    out << ",epsilon_initial=" << policy.epsilon.initial
        << ",epsilon_schedule=" << schedule_to_string(policy.epsilon.kind);
    if (policy.similarity_enabled) {
        out << ",epsilon_s_initial=" << policy.epsilon_s.initial
            << ",epsilon_s_schedule=" << schedule_to_string(policy.epsilon_s.kind)
            << ",similarity_semantics=" << semantics_to_string(policy.semantics);
    }
    return out.str();
}

}  // namespace ringhop
