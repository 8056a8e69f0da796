#pragma once

// Scenario configuration: a single JSON document with a schema_version, one
// scenario kind, and a kind-specific "params" block. Documented schema:
//
//   {
//     "schema_version": 1,
//     "kind": "figure2",            // see kScenarioKindNames
//     "params": { ... }             // optional; kind-specific keys below
//   }
//
// Kind-specific params (all optional, defaults in ScenarioConfig):
//   formation, figure2, figure3:
//     n_side, scaled_spacing_m, altitude_m, rho, out_of_plane_amp_m,
//     include_j2, samples_per_orbit
//   drift-study:
//     the formation keys plus optimize (bool), rho_lo, rho_hi, rho_tol,
//     n_orbits
//   linkbudget, figure1:
//     tx_power_w, wavelength_m, aperture_m, other_loss_db, dwdm_grid
//     ("100ghz"|"75ghz"), terminal_file, schemes_file; linkbudget adds
//     distance_m; figure1 adds distance_min_m, distance_max_m, n_points
//   radiation:
//     dose_rate_rad_per_year, mission_years, inferences_per_year,
//     profiles_file
//   economics:
//     anchor_price_usd_per_kg, anchor_cumulative_mass_t, learning_rate,
//     target_price_usd_per_kg, history_file
//   table1:
//     price_scenarios_usd_per_kg (array), platforms_file
//
// The *_file keys point at structured-text datasets (JSON, documented in
// satcluster/scenario/datasets.hpp), resolved relative to the config file.

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace satcluster {

/// Configuration / schema problems: the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ScenarioKind {
    kFormation,
    kDriftStudy,
    kLinkBudget,
    kFigure1,
    kFigure2,
    kFigure3,
    kRadiation,
    kEconomics,
    kTable1,
};

inline const std::vector<std::pair<std::string, ScenarioKind>>& scenario_kind_names() {
    static const std::vector<std::pair<std::string, ScenarioKind>> kNames = {
        {"formation", ScenarioKind::kFormation},   {"drift-study", ScenarioKind::kDriftStudy},
        {"linkbudget", ScenarioKind::kLinkBudget}, {"figure1", ScenarioKind::kFigure1},
        {"figure2", ScenarioKind::kFigure2},       {"figure3", ScenarioKind::kFigure3},
        {"radiation", ScenarioKind::kRadiation},   {"economics", ScenarioKind::kEconomics},
        {"table1", ScenarioKind::kTable1},
    };
    return kNames;
}

inline std::string scenario_kind_name(ScenarioKind kind) {
    for (const auto& [name, k] : scenario_kind_names())
        if (k == kind) return name;
    return "?";
}

struct ScenarioConfig {
    int schema_version = 1;
    ScenarioKind kind = ScenarioKind::kFormation;
    std::filesystem::path config_dir;  // for resolving *_file references

    // formation family
    int n_side = 9;
    double scaled_spacing_m = 100.0;
    double altitude_m = 650e3;
    double rho = 1.0;
    double out_of_plane_amp_m = 0.0;
    bool include_j2 = false;  // drift-study defaults to true
    int samples_per_orbit = 96;

    // drift-study
    bool optimize = true;
    double rho_lo = 0.998;
    double rho_hi = 1.0005;
    double rho_tol = 2e-4;
    int n_orbits = 15;

    // optical
    double tx_power_w = 5.0;
    double wavelength_m = 1.55e-6;
    double aperture_m = 0.1;
    double other_loss_db = 3.0;
    std::string dwdm_grid = "100ghz";
    double distance_m = 5000e3;
    double distance_min_m = 100.0;
    double distance_max_m = 1e7;
    int n_points = 51;
    std::optional<std::string> terminal_file;
    std::optional<std::string> schemes_file;

    // radiation
    double dose_rate_rad_per_year = 150.0;
    double mission_years = 5.0;
    std::optional<double> inferences_per_year;
    std::optional<std::string> profiles_file;

    // economics
    double anchor_price_usd_per_kg = 1800.0;
    double anchor_cumulative_mass_t = 400.0;
    double learning_rate = 0.20;
    double target_price_usd_per_kg = 200.0;
    std::optional<std::string> history_file;

    // table1
    std::vector<double> price_scenarios_usd_per_kg = {3600.0, 200.0};
    std::optional<std::string> platforms_file;
};

namespace detail {

inline void require_keys_known(const nlohmann::json& obj, const std::set<std::string>& allowed,
                               const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            throw ConfigError("unknown key \"" + key + "\" in " + where);
}

template <typename T>
inline void read_key(const nlohmann::json& obj, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("key \"") + key + "\": wrong type");
    }
}

template <typename T>
inline void read_key(const nlohmann::json& obj, const char* key, std::optional<T>& out) {
    if (!obj.contains(key)) return;
    T v{};
    read_key(obj, key, v);
    out = v;
}

}  // namespace detail

inline ScenarioConfig parse_scenario_config(const nlohmann::json& doc,
                                            const std::filesystem::path& config_dir = {}) {
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    detail::require_keys_known(doc, {"schema_version", "kind", "params"}, "config root");
    if (!doc.contains("schema_version")) throw ConfigError("missing key \"schema_version\"");
    if (!doc.contains("kind")) throw ConfigError("missing key \"kind\"");

    ScenarioConfig cfg;
    cfg.config_dir = config_dir;
    detail::read_key(doc, "schema_version", cfg.schema_version);
    if (cfg.schema_version != 1)
        throw ConfigError("unsupported schema_version " + std::to_string(cfg.schema_version) +
                          " (supported: 1)");

    std::string kind_name;
    detail::read_key(doc, "kind", kind_name);
    bool found = false;
    for (const auto& [name, k] : scenario_kind_names())
        if (name == kind_name) {
            cfg.kind = k;
            found = true;
        }
    if (!found) {
        std::string allowed;
        for (const auto& [name, k] : scenario_kind_names())
            allowed += (allowed.empty() ? "" : ", ") + name;
        throw ConfigError("unknown scenario kind \"" + kind_name + "\" (allowed: " + allowed + ")");
    }

    const nlohmann::json params = doc.value("params", nlohmann::json::object());
    if (!params.is_object()) throw ConfigError("\"params\" must be an object");

    const std::set<std::string> kFormationKeys = {"n_side",     "scaled_spacing_m",
                                                 "altitude_m", "rho",
                                                 "out_of_plane_amp_m", "include_j2",
                                                 "samples_per_orbit"};
    const std::set<std::string> kOpticalKeys = {"tx_power_w", "wavelength_m", "aperture_m",
                                                "other_loss_db", "dwdm_grid", "terminal_file",
                                                "schemes_file"};
    std::set<std::string> allowed;
    switch (cfg.kind) {
        case ScenarioKind::kFormation:
        case ScenarioKind::kFigure2:
        case ScenarioKind::kFigure3:
            allowed = kFormationKeys;
            break;
        case ScenarioKind::kDriftStudy:
            allowed = kFormationKeys;
            allowed.insert({"optimize", "rho_lo", "rho_hi", "rho_tol", "n_orbits"});
            cfg.include_j2 = true;
            break;
        case ScenarioKind::kLinkBudget:
            allowed = kOpticalKeys;
            allowed.insert("distance_m");
            break;
        case ScenarioKind::kFigure1:
            allowed = kOpticalKeys;
            allowed.insert({"distance_min_m", "distance_max_m", "n_points"});
            break;
        case ScenarioKind::kRadiation:
            allowed = {"dose_rate_rad_per_year", "mission_years", "inferences_per_year",
                       "profiles_file"};
            break;
        case ScenarioKind::kEconomics:
            allowed = {"anchor_price_usd_per_kg", "anchor_cumulative_mass_t", "learning_rate",
                       "target_price_usd_per_kg", "history_file"};
            break;
        case ScenarioKind::kTable1:
            allowed = {"price_scenarios_usd_per_kg", "platforms_file"};
            break;
    }
    detail::require_keys_known(params, allowed, "params for kind \"" + kind_name + "\"");

    // snapshot cadence of 1/12 orbit unless overridden
    if (cfg.kind == ScenarioKind::kFigure2) cfg.samples_per_orbit = 12;

    detail::read_key(params, "n_side", cfg.n_side);
    detail::read_key(params, "scaled_spacing_m", cfg.scaled_spacing_m);
    detail::read_key(params, "altitude_m", cfg.altitude_m);
    detail::read_key(params, "rho", cfg.rho);
    detail::read_key(params, "out_of_plane_amp_m", cfg.out_of_plane_amp_m);
    detail::read_key(params, "include_j2", cfg.include_j2);
    detail::read_key(params, "samples_per_orbit", cfg.samples_per_orbit);
    detail::read_key(params, "optimize", cfg.optimize);
    detail::read_key(params, "rho_lo", cfg.rho_lo);
    detail::read_key(params, "rho_hi", cfg.rho_hi);
    detail::read_key(params, "rho_tol", cfg.rho_tol);
    detail::read_key(params, "n_orbits", cfg.n_orbits);
    detail::read_key(params, "tx_power_w", cfg.tx_power_w);
    detail::read_key(params, "wavelength_m", cfg.wavelength_m);
    detail::read_key(params, "aperture_m", cfg.aperture_m);
    detail::read_key(params, "other_loss_db", cfg.other_loss_db);
    detail::read_key(params, "dwdm_grid", cfg.dwdm_grid);
    detail::read_key(params, "distance_m", cfg.distance_m);
    detail::read_key(params, "distance_min_m", cfg.distance_min_m);
    detail::read_key(params, "distance_max_m", cfg.distance_max_m);
    detail::read_key(params, "n_points", cfg.n_points);
    detail::read_key(params, "terminal_file", cfg.terminal_file);
    detail::read_key(params, "schemes_file", cfg.schemes_file);
    detail::read_key(params, "dose_rate_rad_per_year", cfg.dose_rate_rad_per_year);
    detail::read_key(params, "mission_years", cfg.mission_years);
    detail::read_key(params, "inferences_per_year", cfg.inferences_per_year);
    detail::read_key(params, "profiles_file", cfg.profiles_file);
    detail::read_key(params, "anchor_price_usd_per_kg", cfg.anchor_price_usd_per_kg);
    detail::read_key(params, "anchor_cumulative_mass_t", cfg.anchor_cumulative_mass_t);
    detail::read_key(params, "learning_rate", cfg.learning_rate);
    detail::read_key(params, "target_price_usd_per_kg", cfg.target_price_usd_per_kg);
    detail::read_key(params, "history_file", cfg.history_file);
    detail::read_key(params, "price_scenarios_usd_per_kg", cfg.price_scenarios_usd_per_kg);
    detail::read_key(params, "platforms_file", cfg.platforms_file);
    return cfg;
}

inline ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        throw ConfigError("config file not found: " + path.string());
    nlohmann::json doc;
    try {
        std::ifstream in(path);
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_scenario_config(doc, path.parent_path());
}

}  // namespace satcluster
