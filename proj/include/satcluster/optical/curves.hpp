#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/optical/link_budget.hpp"
#include "satcluster/optical/multiplex.hpp"

namespace satcluster {

struct BandwidthSample {
    double distance_m = 0.0;
    std::string scheme;
    double bandwidth_bps = 0.0;
    std::string regime;  // "far-field" or "mux-kxk"
};

/// Per-scheme photon-limited bandwidth over a distance grid, annotated with
/// the spatial-multiplexing regime each distance falls in. Rates follow the
/// far-field 1/d^2 law throughout; the regime label marks where an aperture
/// split would apply.
inline std::vector<BandwidthSample> bandwidth_vs_distance_curve(
    const OpticalTerminal& tx, const OpticalTerminal& rx,
    const std::vector<ModulationScheme>& schemes, const std::vector<double>& distance_grid_m) {
    for (std::size_t k = 1; k < distance_grid_m.size(); ++k)
        if (!(distance_grid_m[k] > distance_grid_m[k - 1]))
            throw std::invalid_argument("bandwidth_vs_distance_curve: grid must ascend");

    std::vector<BandwidthSample> out;
    out.reserve(schemes.size() * distance_grid_m.size());
    for (const double d : distance_grid_m) {
        const double pr = friis_received_power_w(tx, rx, d);
        const auto plan = spatial_multiplex_plan(tx.aperture_diameter_m, tx.wavelength_m, d, 0.0);
        const std::string regime =
            plan.far_field ? "far-field"
                           : "mux-" + std::to_string(plan.array_dim) + "x" +
                                 std::to_string(plan.array_dim);
        for (const auto& s : schemes) {
            BandwidthSample sample;
            sample.distance_m = d;
            sample.scheme = s.name;
            sample.bandwidth_bps = photon_limited_rate_bps(pr, s, tx.wavelength_m);
            sample.regime = regime;
            out.push_back(sample);
        }
    }
    return out;
}

}  // namespace satcluster
