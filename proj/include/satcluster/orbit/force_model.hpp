#pragma once

#include <cmath>
#include <stdexcept>

#include "satcluster/core/constants.hpp"
#include "satcluster/core/vec3.hpp"

namespace satcluster {

/// Point-mass gravity with an optional first-order axisymmetric J2 term.
struct ForceModel {
    double mu_m3s2 = constants::kMuEarth;
    double re_m = constants::kEarthRadius;
    double j2 = constants::kJ2Earth;
    bool include_j2 = true;

    bool valid() const {
        return mu_m3s2 > 0.0 && re_m > 0.0 && j2 >= 0.0 && j2 < 0.01;
    }

    static ForceModel keplerian() { return ForceModel{.include_j2 = false}; }
};

inline Vec3 gravitational_acceleration(const Vec3& pos, const ForceModel& fm) {
    const double r2 = pos.norm2();
    const double r = std::sqrt(r2);
    if (r <= fm.re_m)
        throw std::domain_error("gravitational_acceleration: position at or below Earth radius");
    const double r3 = r2 * r;
    Vec3 a = pos * (-fm.mu_m3s2 / r3);
    if (fm.include_j2) {
        const double r5 = r2 * r3;
        const double k = -1.5 * fm.mu_m3s2 * fm.j2 * fm.re_m * fm.re_m / r5;
        const double z2_r2 = pos.z * pos.z / r2;
        a.x += k * pos.x * (1.0 - 5.0 * z2_r2);
        a.y += k * pos.y * (1.0 - 5.0 * z2_r2);
        a.z += k * pos.z * (3.0 - 5.0 * z2_r2);
    }
    return a;
}

/// Specific orbital energy including the J2 potential when the model has it.
/// Conserved along trajectories of the (axisymmetric) force field.
inline double specific_energy(const Vec3& pos, const Vec3& vel, const ForceModel& fm) {
    const double r2 = pos.norm2();
    const double r = std::sqrt(r2);
    double e = 0.5 * vel.norm2() - fm.mu_m3s2 / r;
    if (fm.include_j2) {
        // U_J2 = (mu*J2*Re^2 / (2 r^3)) * (3 z^2/r^2 - 1)
        e += fm.mu_m3s2 * fm.j2 * fm.re_m * fm.re_m / (2.0 * r2 * r) *
             (3.0 * pos.z * pos.z / r2 - 1.0);
    }
    return e;
}

/// z-component of specific angular momentum; conserved for any axisymmetric
/// field, J2 included.
inline double angular_momentum_z(const Vec3& pos, const Vec3& vel) {
    return pos.x * vel.y - pos.y * vel.x;
}

}  // namespace satcluster
