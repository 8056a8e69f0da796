#pragma once

#include <cmath>
#include <stdexcept>

#include "satcluster/core/constants.hpp"
#include "satcluster/orbit/force_model.hpp"
#include "satcluster/orbit/state.hpp"

namespace satcluster {

inline double mean_motion(double a_m, const ForceModel& fm) {
    if (a_m <= 0.0) throw std::domain_error("mean_motion: nonpositive semi-major axis");
    return std::sqrt(fm.mu_m3s2 / (a_m * a_m * a_m));
}

/// Secular J2 nodal-precession rate of a circular orbit (rad/s).
inline double nodal_precession_rate(double a_m, double inclination_rad, const ForceModel& fm) {
    const double n = mean_motion(a_m, fm);
    const double re_a = fm.re_m / a_m;
    return -1.5 * n * fm.j2 * re_a * re_a * std::cos(inclination_rad);
}

/// Inclination whose J2 nodal precession matches `precession_radps`
/// (default: one full revolution per tropical year, i.e. sun-synchronous).
inline double sun_sync_inclination(double altitude_m, const ForceModel& fm,
                                   double precession_radps = 2.0 * constants::kPi /
                                                             constants::kTropicalYearS) {
    const double a = fm.re_m + altitude_m;
    const double n = mean_motion(a, fm);
    const double re_a = fm.re_m / a;
    const double cos_i = -precession_radps / (1.5 * n * fm.j2 * re_a * re_a);
    if (std::abs(cos_i) > 1.0)
        throw std::domain_error("sun_sync_inclination: no solution at this altitude");
    return std::acos(cos_i);
}

/// Circular reference orbit; mean_motion_radps is derived, never set directly.
struct ReferenceOrbit {
    double altitude_m = 0.0;
    double semi_major_axis_m = 0.0;
    double inclination_rad = 0.0;
    double mean_motion_radps = 0.0;

    double period_s() const { return 2.0 * constants::kPi / mean_motion_radps; }
};

enum class InclinationMode { kEquatorialTest, kSunSynchronous };

inline ReferenceOrbit make_reference_orbit(double altitude_m, InclinationMode mode,
                                           const ForceModel& fm) {
    ReferenceOrbit orb;
    orb.altitude_m = altitude_m;
    orb.semi_major_axis_m = fm.re_m + altitude_m;
    orb.inclination_rad =
        mode == InclinationMode::kSunSynchronous ? sun_sync_inclination(altitude_m, fm) : 0.0;
    orb.mean_motion_radps = mean_motion(orb.semi_major_axis_m, fm);
    return orb;
}

/// ECI state of a point on the reference orbit at argument-of-latitude
/// u = n*t (u measured from the ascending node).
inline StateVector reference_state(const ReferenceOrbit& orb, double t_s) {
    const double n = orb.mean_motion_radps;
    const double a = orb.semi_major_axis_m;
    const double u = n * t_s;
    const double ci = std::cos(orb.inclination_rad);
    const double si = std::sin(orb.inclination_rad);
    const double cu = std::cos(u);
    const double su = std::sin(u);
    StateVector s;
    s.epoch_s = t_s;
    s.position_m = {a * cu, a * su * ci, a * su * si};
    s.velocity_mps = {-a * n * su, a * n * cu * ci, a * n * cu * si};
    return s;
}

}  // namespace satcluster
