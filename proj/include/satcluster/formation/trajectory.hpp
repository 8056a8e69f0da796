#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/core/parallel.hpp"
#include "satcluster/formation/cluster.hpp"
#include "satcluster/orbit/frames.hpp"
#include "satcluster/orbit/propagate.hpp"

namespace satcluster {

/// Time-sampled relative motion of a cluster. `lvlh` is relative to the
/// propagated S0 in its rotating frame; `display` projects the ECI offset
/// from S0 onto the t = 0 orbital-plane basis (a non-rotating view, so the
/// cluster pattern sweeps one revolution per orbit).
struct ClusterTrajectory {
    ReferenceOrbit orbit;
    ClusterSpec spec;
    std::vector<LatticeSite> sites;
    std::size_t s0_index = 0;
    std::size_t s1_index = 0;
    std::vector<double> sample_times_s;
    std::vector<std::vector<HcwState>> lvlh;  // [sample][satellite]
    std::vector<std::vector<Vec3>> display;   // [sample][satellite]

    std::size_t n_satellites() const { return sites.size(); }
};

inline ClusterTrajectory simulate_cluster(const Cluster& cl, int n_orbits, const ForceModel& fm,
                                          const IntegratorConfig& cfg = {},
                                          int samples_per_orbit = 48, unsigned n_threads = 0) {
    if (cl.states.empty()) throw std::invalid_argument("simulate_cluster: empty cluster");
    if (n_orbits < 1) throw std::invalid_argument("simulate_cluster: n_orbits must be >= 1");
    if (samples_per_orbit < 12)
        throw std::invalid_argument("simulate_cluster: need >= 12 samples per orbit");

    ClusterTrajectory traj;
    traj.orbit = cl.orbit;
    traj.spec = cl.spec;
    traj.sites = cl.sites;
    traj.s0_index = cl.s0_index;
    traj.s1_index = cl.s1_index;
    const double period = cl.orbit.period_s();
    const int n_samples = n_orbits * samples_per_orbit + 1;
    traj.sample_times_s.resize(n_samples);
    for (int k = 0; k < n_samples; ++k)
        traj.sample_times_s[k] = period * n_orbits * k / (n_samples - 1);

    const std::size_t n_sat = cl.states.size();
    std::vector<std::vector<StateVector>> eci(n_sat);
    parallel_for(n_sat, n_threads, [&](std::size_t i) {
        try {
            eci[i] = propagate(cl.states[i], traj.sample_times_s, fm, cfg);
        } catch (const std::exception& e) {
            throw IntegrationError("satellite " + std::to_string(i) + ": " + e.what());
        }
    });

    const LvlhFrame frame0 = make_lvlh_frame(cl.states[cl.s0_index]);
    traj.lvlh.resize(n_samples);
    traj.display.resize(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        const StateVector& chief = eci[cl.s0_index][k];
        traj.lvlh[k].resize(n_sat);
        traj.display[k].resize(n_sat);
        for (std::size_t i = 0; i < n_sat; ++i) {
            traj.lvlh[k][i] = eci_to_lvlh(chief, eci[i][k]);
            const Vec3 dr = eci[i][k].position_m - chief.position_m;
            traj.display[k][i] = {dot(dr, frame0.r_hat), dot(dr, frame0.t_hat),
                                  dot(dr, frame0.c_hat)};
        }
    }
    return traj;
}

}  // namespace satcluster
