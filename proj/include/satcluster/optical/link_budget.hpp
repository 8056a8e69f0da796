#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satcluster/optical/terminal.hpp"

namespace satcluster {

// Shannon-Hartley photon floor at 0.6 detector quantum efficiency
inline constexpr double kDetectorQuantumEfficiency = 0.6;
inline constexpr double kShannonPhotonsPerBit = 2.0 * 0.6931471805599453 / kDetectorQuantumEfficiency;

struct ModulationScheme {
    std::string name;
    double photons_per_bit = 0.0;
    std::optional<double> per_channel_rate_bps;
    std::optional<double> per_channel_sensitivity_dbm;

    void validate() const {
        if (name.empty()) throw std::invalid_argument("ModulationScheme: name required");
        if (photons_per_bit < kShannonPhotonsPerBit - 1e-9)
            throw std::invalid_argument("ModulationScheme: photons_per_bit below Shannon floor");
    }

    static ModulationScheme ook() { return {"OOK", 20.0, {}, {}}; }
    static ModulationScheme pm_16qam() { return {"PM-16QAM", 190.0, 400e9, -18.0}; }
    static ModulationScheme shannon_limit() {
        return {"Shannon", kShannonPhotonsPerBit, {}, {}};
    }
};

/// Far-field Friis received power, P_R = P_T*G_T*G_R*(lambda/(4*pi*d))^2*L.
/// The optional flag reports link distances inside the transmit aperture's
/// confocal near-field limit, where this budget is pessimistic.
inline double friis_received_power_w(const OpticalTerminal& tx, const OpticalTerminal& rx,
                                     double distance_m, bool* near_field_flag = nullptr) {
    tx.validate();
    rx.validate();
    if (!(distance_m > 0.0)) throw std::domain_error("friis_received_power_w: distance must be > 0");
    if (near_field_flag)
        *near_field_flag = distance_m < near_field_limit_m(tx.aperture_diameter_m / 2.0,
                                                           tx.wavelength_m);
    const double gt = std::pow(10.0, terminal_gain_db(tx) / 10.0);
    const double gr = std::pow(10.0, terminal_gain_db(rx) / 10.0);
    const double loss = std::pow(10.0, -tx.other_loss_db / 10.0);
    const double path = tx.wavelength_m / (4.0 * constants::kPi * distance_m);
    return tx.tx_power_w * gt * gr * path * path * loss;
}

/// Photon-limited data rate, rate = P_R / (PPB * h*c/lambda).
inline double photon_limited_rate_bps(double received_power_w, const ModulationScheme& scheme,
                                      double wavelength_m) {
    scheme.validate();
    if (!(received_power_w > 0.0))
        throw std::domain_error("photon_limited_rate_bps: power must be positive");
    return received_power_w / (scheme.photons_per_bit * photon_energy_j(wavelength_m));
}

struct DwdmPreset {
    int n_channels = 0;
    double per_channel_rate_bps = 0.0;
    double per_channel_sensitivity_dbm = 0.0;

    // 100 GHz grid: 24 channels of 400G coherent carriers
    static DwdmPreset grid_100ghz() { return {24, 400e9, -18.0}; }
    // 75 GHz grid packs 32 channels for 12.8 Tbps aggregate
    static DwdmPreset grid_75ghz() { return {32, 400e9, -18.0}; }
};

struct DwdmRequirement {
    double aggregate_bps = 0.0;
    double required_power_w = 0.0;
};

/// Aggregate bandwidth and total receiver power requirement of an n-channel
/// DWDM stack.
inline DwdmRequirement dwdm_aggregate(int n_channels, double per_channel_rate_bps,
                                      double per_channel_sensitivity_dbm) {
    if (n_channels < 1) throw std::invalid_argument("dwdm_aggregate: need >= 1 channel");
    if (!(per_channel_rate_bps > 0.0))
        throw std::invalid_argument("dwdm_aggregate: channel rate must be positive");
    DwdmRequirement req;
    req.aggregate_bps = n_channels * per_channel_rate_bps;
    req.required_power_w = n_channels * std::pow(10.0, per_channel_sensitivity_dbm / 10.0) * 1e-3;
    return req;
}

inline DwdmRequirement dwdm_aggregate(const DwdmPreset& preset) {
    return dwdm_aggregate(preset.n_channels, preset.per_channel_rate_bps,
                          preset.per_channel_sensitivity_dbm);
}

enum class DwdmFeasibility { kFeasible, kInfeasible, kUnbounded };

struct MaxDistanceResult {
    DwdmFeasibility feasibility = DwdmFeasibility::kInfeasible;
    double distance_m = 0.0;
};

/// Largest far-field distance at which the link still closes the DWDM power
/// requirement; exact inverse of the Friis budget by bisection to 1 m.
inline MaxDistanceResult max_dwdm_distance(const OpticalTerminal& tx, const OpticalTerminal& rx,
                                           double required_power_w) {
    if (!(required_power_w >= 0.0))
        throw std::domain_error("max_dwdm_distance: requirement must be >= 0");
    MaxDistanceResult res;
    if (required_power_w == 0.0) {
        res.feasibility = DwdmFeasibility::kUnbounded;
        res.distance_m = std::numeric_limits<double>::infinity();
        return res;
    }
    double lo = near_field_limit_m(tx.aperture_diameter_m / 2.0, tx.wavelength_m);
    if (friis_received_power_w(tx, rx, lo) < required_power_w) {
        res.feasibility = DwdmFeasibility::kInfeasible;
        return res;
    }
    double hi = lo;
    while (friis_received_power_w(tx, rx, hi) >= required_power_w) hi *= 2.0;
    while (hi - lo > 1.0) {
        const double mid = 0.5 * (lo + hi);
        (friis_received_power_w(tx, rx, mid) >= required_power_w ? lo : hi) = mid;
    }
    res.feasibility = DwdmFeasibility::kFeasible;
    res.distance_m = 0.5 * (lo + hi);
    return res;
}

struct LinkBudgetResult {
    double distance_m = 0.0;
    double received_power_w = 0.0;
    double spot_diameter_m = 0.0;
    bool near_field = false;
    std::vector<std::pair<std::string, double>> photon_limited_rate_bps;  // per scheme
    bool dwdm_feasible = false;
    double margin_db = 0.0;  // received power over the DWDM requirement
};

/// One-stop budget for a terminal pair at a given distance.
inline LinkBudgetResult link_budget(const OpticalTerminal& tx, const OpticalTerminal& rx,
                                    double distance_m, const std::vector<ModulationScheme>& schemes,
                                    const DwdmRequirement& req) {
    LinkBudgetResult res;
    res.distance_m = distance_m;
    res.received_power_w = friis_received_power_w(tx, rx, distance_m, &res.near_field);
    res.spot_diameter_m = spot_diameter_m(tx.aperture_diameter_m, tx.wavelength_m, distance_m);
    for (const auto& s : schemes)
        res.photon_limited_rate_bps.push_back(
            {s.name, photon_limited_rate_bps(res.received_power_w, s, tx.wavelength_m)});
    if (req.required_power_w > 0.0) {
        res.dwdm_feasible = res.received_power_w >= req.required_power_w;
        res.margin_db = 10.0 * std::log10(res.received_power_w / req.required_power_w);
    }
    return res;
}

}  // namespace satcluster
