#pragma once

// Loaders for the structured-text (JSON) datasets scenario configs may
// reference. Documented keys:
//
//  terminal file:   {"tx_power_w", "wavelength_m", "aperture_diameter_m",
//                    "gain_db_override" (optional), "other_loss_db"}
//  schemes file:    [{"name", "photons_per_bit",
//                     "per_channel_rate_bps" (optional),
//                     "per_channel_sensitivity_dbm" (optional)}, ...]
//  profiles file:   [{"failure_mode", "characteristic_dose_rad_per_event",
//                     "n_events_observed",
//                     "tid_failure_threshold_rad" (optional),
//                     "reported_cross_section_cm2" (optional)}, ...]
//  platforms file:  [{"name", "mass_kg", "power_kw", "lifespan_years"}, ...]
//  history file:    [{"cumulative_mass_t", "price_usd_per_kg"}, ...]

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "satcluster/economics/power_price.hpp"
#include "satcluster/optical/link_budget.hpp"
#include "satcluster/radiation/model.hpp"
#include "satcluster/scenario/config.hpp"

namespace satcluster {

namespace detail {

inline nlohmann::json load_dataset_json(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        throw ConfigError("referenced dataset file not found: " + path.string());
    try {
        std::ifstream in(path);
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace detail

inline OpticalTerminal load_terminal_dataset(const std::filesystem::path& path) {
    const auto doc = detail::load_dataset_json(path);
    detail::require_keys_known(doc,
                               {"tx_power_w", "wavelength_m", "aperture_diameter_m",
                                "gain_db_override", "other_loss_db"},
                               path.string());
    OpticalTerminal t;
    detail::read_key(doc, "tx_power_w", t.tx_power_w);
    detail::read_key(doc, "wavelength_m", t.wavelength_m);
    detail::read_key(doc, "aperture_diameter_m", t.aperture_diameter_m);
    detail::read_key(doc, "gain_db_override", t.gain_db_override);
    detail::read_key(doc, "other_loss_db", t.other_loss_db);
    return t;
}

inline std::vector<ModulationScheme> load_schemes_dataset(const std::filesystem::path& path) {
    const auto doc = detail::load_dataset_json(path);
    if (!doc.is_array() || doc.empty())
        throw ConfigError(path.string() + ": expected a non-empty array of schemes");
    std::vector<ModulationScheme> out;
    for (const auto& item : doc) {
        detail::require_keys_known(item,
                                   {"name", "photons_per_bit", "per_channel_rate_bps",
                                    "per_channel_sensitivity_dbm"},
                                   path.string());
        ModulationScheme s;
        detail::read_key(item, "name", s.name);
        detail::read_key(item, "photons_per_bit", s.photons_per_bit);
        detail::read_key(item, "per_channel_rate_bps", s.per_channel_rate_bps);
        detail::read_key(item, "per_channel_sensitivity_dbm", s.per_channel_sensitivity_dbm);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<SusceptibilityProfile> load_profiles_dataset(
    const std::filesystem::path& path) {
    const auto doc = detail::load_dataset_json(path);
    if (!doc.is_array() || doc.empty())
        throw ConfigError(path.string() + ": expected a non-empty array of profiles");
    std::vector<SusceptibilityProfile> out;
    for (const auto& item : doc) {
        detail::require_keys_known(item,
                                   {"failure_mode", "characteristic_dose_rad_per_event",
                                    "n_events_observed", "tid_failure_threshold_rad",
                                    "reported_cross_section_cm2"},
                                   path.string());
        SusceptibilityProfile p;
        detail::read_key(item, "failure_mode", p.failure_mode);
        detail::read_key(item, "characteristic_dose_rad_per_event",
                         p.characteristic_dose_rad_per_event);
        detail::read_key(item, "n_events_observed", p.n_events_observed);
        detail::read_key(item, "tid_failure_threshold_rad", p.tid_failure_threshold_rad);
        detail::read_key(item, "reported_cross_section_cm2", p.reported_cross_section_cm2);
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<SatellitePlatform> load_platforms_dataset(const std::filesystem::path& path) {
    const auto doc = detail::load_dataset_json(path);
    if (!doc.is_array() || doc.empty())
        throw ConfigError(path.string() + ": expected a non-empty array of platforms");
    std::vector<SatellitePlatform> out;
    for (const auto& item : doc) {
        detail::require_keys_known(item, {"name", "mass_kg", "power_kw", "lifespan_years"},
                                   path.string());
        SatellitePlatform p;
        detail::read_key(item, "name", p.name);
        detail::read_key(item, "mass_kg", p.mass_kg);
        detail::read_key(item, "power_kw", p.power_kw);
        detail::read_key(item, "lifespan_years", p.lifespan_years);
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<std::pair<double, double>> load_price_history_dataset(
    const std::filesystem::path& path) {
    const auto doc = detail::load_dataset_json(path);
    if (!doc.is_array() || doc.size() < 2)
        throw ConfigError(path.string() + ": expected an array of >= 2 history points");
    std::vector<std::pair<double, double>> out;
    for (const auto& item : doc) {
        detail::require_keys_known(item, {"cumulative_mass_t", "price_usd_per_kg"}, path.string());
        double mass = 0.0, price = 0.0;
        detail::read_key(item, "cumulative_mass_t", mass);
        detail::read_key(item, "price_usd_per_kg", price);
        out.push_back({mass, price});
    }
    return out;
}

}  // namespace satcluster
