#include <gtest/gtest.h>

#include <cmath>

#include "satcluster/orbit/force_model.hpp"

using namespace satcluster;
using constants::kEarthRadius;
using constants::kMuEarth;

TEST(ForceModel, PointMassAlongRadius) {
    ForceModel fm = ForceModel::keplerian();
    const double a = 7.028137e6;
    const Vec3 acc = gravitational_acceleration({a, 0.0, 0.0}, fm);
    EXPECT_NEAR(acc.x, -kMuEarth / (a * a), 1e-12);
    EXPECT_EQ(acc.y, 0.0);
    EXPECT_EQ(acc.z, 0.0);
}

TEST(ForceModel, MagnitudeAt650km) {
    ForceModel fm = ForceModel::keplerian();
    const double a = kEarthRadius + 650e3;
    const Vec3 acc = gravitational_acceleration({0.0, a, 0.0}, fm);
    EXPECT_NEAR(acc.norm(), 8.0697, 5e-4);
}

TEST(ForceModel, EquatorialJ2HasNoOutOfPlaneForce) {
    ForceModel fm;  // J2 on
    const double a = 7.0e6;
    const Vec3 acc = gravitational_acceleration({a * 0.6, -a * 0.8, 0.0}, fm);
    EXPECT_EQ(acc.z, 0.0);
}

TEST(ForceModel, J2StrengthensEquatorialPull) {
    const double a = 7.028137e6;
    ForceModel kep = ForceModel::keplerian();
    ForceModel j2;
    const double g0 = gravitational_acceleration({a, 0.0, 0.0}, kep).norm();
    const double g1 = gravitational_acceleration({a, 0.0, 0.0}, j2).norm();
    // equatorial J2 term adds -1.5*mu*J2*Re^2/r^4 radially inward
    const double extra = 1.5 * kMuEarth * j2.j2 * kEarthRadius * kEarthRadius / std::pow(a, 4);
    EXPECT_NEAR(g1 - g0, extra, 1e-12);
}

TEST(ForceModel, PolarJ2Acceleration) {
    ForceModel fm;
    const double r = 7.028137e6;
    const Vec3 acc = gravitational_acceleration({0.0, 0.0, r}, fm);
    EXPECT_EQ(acc.x, 0.0);
    EXPECT_EQ(acc.y, 0.0);
    // on the pole: a_z = -mu/r^2 + 3*mu*J2*Re^2/r^4
    const double expect =
        -kMuEarth / (r * r) + 3.0 * kMuEarth * fm.j2 * kEarthRadius * kEarthRadius / std::pow(r, 4);
    EXPECT_NEAR(acc.z, expect, 1e-12);
}

TEST(ForceModel, BelowSurfaceRejected) {
    ForceModel fm;
    EXPECT_THROW(gravitational_acceleration({fm.re_m * 0.5, 0.0, 0.0}, fm), std::domain_error);
}

TEST(ForceModel, EnergyIncludesJ2Potential) {
    ForceModel fm;
    const double a = 7.028137e6;
    const Vec3 pos{a, 0.0, 0.0};
    const Vec3 vel{0.0, 7500.0, 0.0};
    const double e_kep = 0.5 * vel.norm2() - kMuEarth / a;
    const double u_j2 = -kMuEarth * fm.j2 * kEarthRadius * kEarthRadius / (2.0 * a * a * a);
    EXPECT_NEAR(specific_energy(pos, vel, fm), e_kep + u_j2, 1e-6);
    ForceModel kep = ForceModel::keplerian();
    EXPECT_NEAR(specific_energy(pos, vel, kep), e_kep, 1e-6);
}

TEST(ForceModel, AngularMomentumZ) {
    EXPECT_NEAR(angular_momentum_z({2.0, 0.0, 9.0}, {0.0, 3.0, -1.0}), 6.0, 1e-15);
}
