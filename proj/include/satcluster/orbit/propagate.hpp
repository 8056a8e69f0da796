#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "satcluster/orbit/dop853.hpp"
#include "satcluster/orbit/force_model.hpp"
#include "satcluster/orbit/state.hpp"

namespace satcluster {

namespace detail {

struct OrbitRhs {
    const ForceModel& fm;
    void operator()(double /*t*/, const StateArray<6>& y, StateArray<6>& dydt) const {
        const Vec3 pos{y[0], y[1], y[2]};
        const Vec3 acc = gravitational_acceleration(pos, fm);
        dydt[0] = y[3];
        dydt[1] = y[4];
        dydt[2] = y[5];
        dydt[3] = acc.x;
        dydt[4] = acc.y;
        dydt[5] = acc.z;
    }
};

inline StateArray<6> pack(const StateVector& s) {
    return {s.position_m.x, s.position_m.y, s.position_m.z,
            s.velocity_mps.x, s.velocity_mps.y, s.velocity_mps.z};
}

inline StateVector unpack(double t, const StateArray<6>& y) {
    return {t, {y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
}

inline Dop853Options to_dop853(const IntegratorConfig& cfg) {
    Dop853Options opt;
    opt.rel_tol = cfg.rel_tol;
    opt.abs_tol = cfg.abs_tol_m;
    opt.max_step = cfg.max_step_s;
    return opt;
}

}  // namespace detail

/// Endpoint-only propagation under the given force model.
inline StateVector propagate_to(const StateVector& state0, double t_end_s, const ForceModel& fm,
                                const IntegratorConfig& cfg = {}) {
    if (!cfg.valid()) throw std::invalid_argument("propagate_to: invalid integrator config");
    if (t_end_s == state0.epoch_s) return state0;
    detail::OrbitRhs rhs{fm};
    const auto y = dop853_integrate<6>(rhs, state0.epoch_s, detail::pack(state0), t_end_s,
                                       detail::to_dop853(cfg));
    return detail::unpack(t_end_s, y);
}

/// Trajectory sampled at the requested epochs (ascending, >= state0.epoch_s).
inline std::vector<StateVector> propagate(const StateVector& state0,
                                          std::span<const double> sample_times_s,
                                          const ForceModel& fm, const IntegratorConfig& cfg = {}) {
    if (!cfg.valid()) throw std::invalid_argument("propagate: invalid integrator config");
    std::vector<StateVector> out(sample_times_s.size());
    detail::OrbitRhs rhs{fm};
    dop853_integrate_sampled<6>(
        rhs, state0.epoch_s, detail::pack(state0), sample_times_s, detail::to_dop853(cfg),
        cfg.dense_output,
        [&](std::size_t i, double t, const StateArray<6>& y) { out[i] = detail::unpack(t, y); });
    return out;
}

}  // namespace satcluster
