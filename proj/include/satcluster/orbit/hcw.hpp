#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace satcluster {

/// Relative state in the rotating LVLH frame of a circular reference orbit:
/// x radial (outward), y along-track, z cross-track.
struct HcwState {
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;
    double xdot_mps = 0.0;
    double ydot_mps = 0.0;
    double zdot_mps = 0.0;
    double n_radps = 0.0;
};

/// Along-track rate that closes the in-plane relative orbit (no secular drift).
inline double hcw_bounded_velocity(double x0_m, double n_radps) { return -2.0 * n_radps * x0_m; }

/// Closed-form solution of the Hill-Clohessy-Wiltshire equations.
inline HcwState hcw_propagate(const HcwState& s0, double t_s) {
    if (s0.n_radps <= 0.0) throw std::domain_error("hcw_propagate: n_radps must be positive");
    const double n = s0.n_radps;
    const double nt = n * t_s;
    const double c = std::cos(nt);
    const double s = std::sin(nt);
    HcwState r;
    r.n_radps = n;
    r.x_m = (4.0 - 3.0 * c) * s0.x_m + (s / n) * s0.xdot_mps + (2.0 / n) * (1.0 - c) * s0.ydot_mps;
    r.y_m = 6.0 * (s - nt) * s0.x_m + s0.y_m + (2.0 / n) * (c - 1.0) * s0.xdot_mps +
            (4.0 * s - 3.0 * nt) / n * s0.ydot_mps;
    r.z_m = c * s0.z_m + (s / n) * s0.zdot_mps;
    r.xdot_mps = 3.0 * n * s * s0.x_m + c * s0.xdot_mps + 2.0 * s * s0.ydot_mps;
    r.ydot_mps = 6.0 * n * (c - 1.0) * s0.x_m - 2.0 * s * s0.xdot_mps +
                 (4.0 * c - 3.0) * s0.ydot_mps;
    r.zdot_mps = -n * s * s0.z_m + c * s0.zdot_mps;
    return r;
}

/// In-plane HCW state-transition matrix over time t, acting on
/// (x, y, xdot, ydot). Row-major 4x4.
inline std::array<double, 16> hcw_stm_inplane(double n, double t_s) {
    const double nt = n * t_s;
    const double c = std::cos(nt);
    const double s = std::sin(nt);
    return {4.0 - 3.0 * c, 0.0, s / n,            2.0 * (1.0 - c) / n,
            6.0 * (s - nt), 1.0, 2.0 * (c - 1.0) / n, (4.0 * s - 3.0 * nt) / n,
            3.0 * n * s,   0.0, c,                2.0 * s,
            6.0 * n * (c - 1.0), 0.0, -2.0 * s,   4.0 * c - 3.0};
}

}  // namespace satcluster
