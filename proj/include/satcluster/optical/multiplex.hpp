#pragma once

#include <stdexcept>

#include "satcluster/optical/link_budget.hpp"

namespace satcluster {

/// k x k array of independent beams sharing one aperture. At short range a
/// link is crosstalk-limited, not power-limited, so the packing rule is
/// purely the confocal near-field criterion per sub-beam.
struct MultiplexPlan {
    int array_dim = 1;  // k
    double per_beam_aperture_m = 0.0;
    double max_distance_m = 0.0;  // near-field limit of one sub-beam
    double aggregate_bandwidth_bps = 0.0;
    bool far_field = false;  // target beyond even the full-aperture limit
};

/// Largest k x k split of the total aperture whose per-beam near-field limit
/// still covers the target distance.
inline MultiplexPlan spatial_multiplex_plan(double total_aperture_m, double wavelength_m,
                                            double target_distance_m,
                                            double per_link_bandwidth_bps) {
    if (!(total_aperture_m > 0.0) || !(wavelength_m > 0.0))
        throw std::invalid_argument("spatial_multiplex_plan: aperture and wavelength positive");
    if (!(target_distance_m > 0.0))
        throw std::invalid_argument("spatial_multiplex_plan: target distance must be > 0");

    MultiplexPlan plan;
    int k = 1;
    if (near_field_limit_m(total_aperture_m / 2.0, wavelength_m) < target_distance_m) {
        plan.far_field = true;  // single full-aperture far-field link
    } else {
        while (near_field_limit_m(total_aperture_m / (2.0 * (k + 1)), wavelength_m) >=
               target_distance_m)
            ++k;
    }
    plan.array_dim = k;
    plan.per_beam_aperture_m = total_aperture_m / k;
    plan.max_distance_m = near_field_limit_m(plan.per_beam_aperture_m / 2.0, wavelength_m);
    plan.aggregate_bandwidth_bps = static_cast<double>(k) * k * per_link_bandwidth_bps;
    return plan;
}

}  // namespace satcluster
