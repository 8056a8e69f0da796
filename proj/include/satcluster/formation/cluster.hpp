#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/orbit/frames.hpp"
#include "satcluster/orbit/hcw.hpp"
#include "satcluster/orbit/reference_orbit.hpp"
#include "satcluster/orbit/state.hpp"

namespace satcluster {

/// Formation design parameters. The lattice lives in "scaled" coordinates
/// (p, q) = (radial, along-track/2), where bounded relative motion is a rigid
/// rotation at the orbital rate, so lattice spacing is preserved over time.
struct ClusterSpec {
    int n_side = 9;                  // odd; sets the lattice radius (n_side+1)/2
    double scaled_spacing_m = 100.0;
    double altitude_m = 650e3;
    double axis_ratio_rho = 1.0;     // radial-amplitude correction (see optimize_axis_ratio)
    double out_of_plane_amp_m = 0.0;
    InclinationMode inclination_mode = InclinationMode::kSunSynchronous;

    void validate() const {
        if (n_side < 1 || n_side % 2 == 0)
            throw std::invalid_argument("ClusterSpec: n_side must be odd and >= 1");
        if (!(scaled_spacing_m > 0.0))
            throw std::invalid_argument("ClusterSpec: scaled_spacing_m must be positive");
        if (!(altitude_m > 0.0))
            throw std::invalid_argument("ClusterSpec: altitude_m must be positive");
        if (axis_ratio_rho < 0.99 || axis_ratio_rho > 1.01)
            throw std::invalid_argument("ClusterSpec: axis_ratio_rho outside [0.99, 1.01]");
        if (out_of_plane_amp_m < 0.0)
            throw std::invalid_argument("ClusterSpec: out_of_plane_amp_m must be >= 0");
    }
};

struct LatticeSite {
    int i = 0;  // radial index (scaled)
    int j = 0;  // along-track index (scaled)
};

struct Cluster {
    ClusterSpec spec;
    ReferenceOrbit orbit;
    std::vector<LatticeSite> sites;
    std::vector<HcwState> design_rel;  // designed LVLH state at t = 0
    std::vector<StateVector> states;   // ECI at t = 0, energy-equalized
    std::size_t s0_index = 0;          // central reference satellite
    std::size_t s1_index = 0;          // max along-track satellite at t = 0
};

/// Lattice sites: integer points of a disk of radius (n_side+1)/2 in scaled
/// coordinates, so every satellite's 2:1 relative ellipse stays inside the
/// +-(R, R/2) bounding ellipse. n_side = 9 gives 81 sites; n_side = 1 gives
/// just the center.
inline std::vector<LatticeSite> lattice_sites(int n_side) {
    std::vector<LatticeSite> sites;
    if (n_side == 1) {
        sites.push_back({0, 0});
        return sites;
    }
    const int r = (n_side + 1) / 2;
    for (int i = -r; i <= r; ++i)
        for (int j = -r; j <= r; ++j)
            if (i * i + j * j <= r * r) sites.push_back({i, j});
    return sites;
}

inline Cluster generate_cluster(const ClusterSpec& spec, const ForceModel& fm) {
    spec.validate();
    Cluster cl;
    cl.spec = spec;
    cl.orbit = make_reference_orbit(spec.altitude_m, spec.inclination_mode, fm);
    cl.sites = lattice_sites(spec.n_side);
    const double n = cl.orbit.mean_motion_radps;
    const double s = spec.scaled_spacing_m;
    const double rho = spec.axis_ratio_rho;
    const StateVector chief0 = reference_state(cl.orbit, 0.0);
    const double a_ref = cl.orbit.semi_major_axis_m;

    double best_y = -1.0;
    for (std::size_t k = 0; k < cl.sites.size(); ++k) {
        const double u = cl.sites[k].i * s;  // scaled radial
        const double v = cl.sites[k].j * s;  // scaled along-track
        HcwState rel;
        rel.n_radps = n;
        // bounded 2:1 ellipse through (u, 2v), with the radial channel
        // (x and xdot) scaled by rho; ydot keeps the rho = 1 bounded-motion
        // value, which tilts the effective boundedness condition against the
        // J2-modified relative dynamics
        rel.x_m = rho * u;
        rel.y_m = 2.0 * v;
        rel.xdot_mps = rho * n * v;
        rel.ydot_mps = -2.0 * n * u;
        if (spec.out_of_plane_amp_m > 0.0) {
            const double phase = std::atan2(v, u);
            rel.z_m = spec.out_of_plane_amp_m * std::cos(phase);
            rel.zdot_mps = -spec.out_of_plane_amp_m * n * std::sin(phase);
        }
        StateVector eci = lvlh_to_eci(chief0, rel);
        // Pin each satellite's Keplerian semi-major axis, removing the
        // second-order error of the linearized construction. Fighting J2 the
        // design carries its intended offset da = 2*ydot/n + 4*x =
        // 4u(rho - 1); in a Keplerian field drift-free means equal periods,
        // so the offset is dropped and the pattern is exactly orbit-periodic.
        const double a_target =
            fm.include_j2 ? a_ref + 4.0 * u * (rho - 1.0) : a_ref;
        const double r_now = eci.position_m.norm();
        const double v2_target = fm.mu_m3s2 * (2.0 / r_now - 1.0 / a_target);
        if (v2_target > 0.0) {
            const double scale = std::sqrt(v2_target / eci.velocity_mps.norm2());
            eci.velocity_mps = eci.velocity_mps * scale;
        }
        cl.design_rel.push_back(rel);
        cl.states.push_back(eci);
        if (cl.sites[k].i == 0 && cl.sites[k].j == 0) cl.s0_index = k;
        if (rel.y_m > best_y) {
            best_y = rel.y_m;
            cl.s1_index = k;
        }
    }
    // S0 carries no offset: keep it exactly on the reference orbit.
    cl.states[cl.s0_index] = chief0;
    return cl;
}

/// Max distance of any site from the lattice center, in scaled meters.
inline double scaled_lattice_radius(const Cluster& cl) {
    double best = 0.0;
    for (const LatticeSite& site : cl.sites) {
        const double r = std::hypot(static_cast<double>(site.i), static_cast<double>(site.j)) *
                         cl.spec.scaled_spacing_m;
        best = std::max(best, r);
    }
    return best;
}

}  // namespace satcluster
