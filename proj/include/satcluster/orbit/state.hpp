#pragma once

#include "satcluster/core/vec3.hpp"

namespace satcluster {

/// Epoch plus Earth-centered inertial position/velocity of one satellite.
struct StateVector {
    double epoch_s = 0.0;
    Vec3 position_m;
    Vec3 velocity_mps;

    bool finite() const { return position_m.finite() && velocity_mps.finite(); }
};

struct IntegratorConfig {
    double rel_tol = 1e-12;
    double abs_tol_m = 1e-6;
    double max_step_s = 1e30;
    bool dense_output = true;

    bool valid() const { return rel_tol > 0.0 && rel_tol <= 1e-9 && abs_tol_m > 0.0; }
};

}  // namespace satcluster
