#pragma once

#include <cmath>
#include <stdexcept>

#include "satcluster/core/vec3.hpp"
#include "satcluster/orbit/hcw.hpp"
#include "satcluster/orbit/state.hpp"

namespace satcluster {

/// Rotating radial / along-track / cross-track frame of a chief satellite.
struct LvlhFrame {
    Vec3 r_hat, t_hat, c_hat;  // basis vectors in ECI
    Vec3 omega_eci;            // frame angular velocity in ECI, rad/s
    double n_radps = 0.0;      // instantaneous rotation rate |omega|
};

inline LvlhFrame make_lvlh_frame(const StateVector& chief) {
    const Vec3 h = cross(chief.position_m, chief.velocity_mps);
    const double hn = h.norm();
    const double r2 = chief.position_m.norm2();
    if (hn <= 0.0 || r2 <= 0.0)
        throw std::domain_error("make_lvlh_frame: degenerate chief state (|r x v| = 0)");
    LvlhFrame f;
    f.r_hat = normalized(chief.position_m);
    f.c_hat = h / hn;
    f.t_hat = cross(f.c_hat, f.r_hat);
    f.omega_eci = h / r2;
    f.n_radps = hn / r2;
    return f;
}

/// Deputy state relative to the chief, in the chief's rotating LVLH frame.
inline HcwState eci_to_lvlh(const StateVector& chief, const StateVector& deputy) {
    const LvlhFrame f = make_lvlh_frame(chief);
    const Vec3 dr = deputy.position_m - chief.position_m;
    // subtract the frame-rotation velocity before projecting
    const Vec3 dv = deputy.velocity_mps - chief.velocity_mps - cross(f.omega_eci, dr);
    HcwState s;
    s.x_m = dot(dr, f.r_hat);
    s.y_m = dot(dr, f.t_hat);
    s.z_m = dot(dr, f.c_hat);
    s.xdot_mps = dot(dv, f.r_hat);
    s.ydot_mps = dot(dv, f.t_hat);
    s.zdot_mps = dot(dv, f.c_hat);
    s.n_radps = f.n_radps;
    return s;
}

/// Inverse of eci_to_lvlh for the same chief state.
inline StateVector lvlh_to_eci(const StateVector& chief, const HcwState& rel) {
    const LvlhFrame f = make_lvlh_frame(chief);
    const Vec3 dr = f.r_hat * rel.x_m + f.t_hat * rel.y_m + f.c_hat * rel.z_m;
    const Vec3 dv_rot = f.r_hat * rel.xdot_mps + f.t_hat * rel.ydot_mps + f.c_hat * rel.zdot_mps;
    StateVector out;
    out.epoch_s = chief.epoch_s;
    out.position_m = chief.position_m + dr;
    out.velocity_mps = chief.velocity_mps + dv_rot + cross(f.omega_eci, dr);
    return out;
}

}  // namespace satcluster
