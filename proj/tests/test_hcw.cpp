#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "satcluster/orbit/frames.hpp"
#include "satcluster/orbit/hcw.hpp"
#include "satcluster/orbit/propagate.hpp"
#include "satcluster/orbit/reference_orbit.hpp"

using namespace satcluster;

namespace {

constexpr double kN = 1.0715e-3;

HcwState zeros() {
    HcwState s;
    s.n_radps = kN;
    return s;
}

}  // namespace

TEST(Hcw, ZeroStaysZero) {
    HcwState s = hcw_propagate(zeros(), 5000.0);
    EXPECT_EQ(s.x_m, 0.0);
    EXPECT_EQ(s.y_m, 0.0);
    EXPECT_EQ(s.z_m, 0.0);
}

TEST(Hcw, BoundedOrbitIsTwoToOneEllipse) {
    HcwState s0 = zeros();
    s0.x_m = 100.0;
    s0.ydot_mps = hcw_bounded_velocity(s0.x_m, kN);
    const double period = 2.0 * constants::kPi / kN;
    double max_x = 0.0, max_y = 0.0;
    for (int i = 0; i <= 360; ++i) {
        const HcwState s = hcw_propagate(s0, period * i / 360.0);
        max_x = std::max(max_x, std::abs(s.x_m));
        max_y = std::max(max_y, std::abs(s.y_m));
        // on-ellipse identity: (x/A)^2 + (y/2A)^2 = 1 for a centered ellipse
        EXPECT_NEAR(std::pow(s.x_m / 100.0, 2) + std::pow(s.y_m / 200.0, 2), 1.0, 1e-9);
    }
    EXPECT_NEAR(max_x, 100.0, 1e-6);
    EXPECT_NEAR(max_y, 200.0, 1e-3);
    // closure after one period
    const HcwState s1 = hcw_propagate(s0, period);
    EXPECT_NEAR(s1.x_m, s0.x_m, 1e-9);
    EXPECT_NEAR(s1.y_m, s0.y_m, 1e-6);
}

TEST(Hcw, OutOfPlaneCosine) {
    HcwState s0 = zeros();
    s0.z_m = 50.0;
    const double period = 2.0 * constants::kPi / kN;
    for (int i = 0; i <= 24; ++i) {
        const double t = period * i / 24.0;
        const HcwState s = hcw_propagate(s0, t);
        EXPECT_NEAR(s.z_m, 50.0 * std::cos(kN * t), 1e-9);
    }
}

TEST(Hcw, SatisfiesOdesByFiniteDifference) {
    HcwState s0 = zeros();
    s0.x_m = 80.0;
    s0.y_m = -120.0;
    s0.z_m = 30.0;
    s0.xdot_mps = 0.05;
    s0.ydot_mps = -0.02;
    s0.zdot_mps = 0.01;
    const double t = 2000.0, dt = 0.05;
    const HcwState sm = hcw_propagate(s0, t - dt);
    const HcwState sc = hcw_propagate(s0, t);
    const HcwState sp = hcw_propagate(s0, t + dt);
    const double xdd = (sp.x_m - 2.0 * sc.x_m + sm.x_m) / (dt * dt);
    const double ydd = (sp.y_m - 2.0 * sc.y_m + sm.y_m) / (dt * dt);
    const double zdd = (sp.z_m - 2.0 * sc.z_m + sm.z_m) / (dt * dt);
    EXPECT_NEAR(xdd, 3.0 * kN * kN * sc.x_m + 2.0 * kN * sc.ydot_mps, 1e-7);
    EXPECT_NEAR(ydd, -2.0 * kN * sc.xdot_mps, 1e-7);
    EXPECT_NEAR(zdd, -kN * kN * sc.z_m, 1e-7);
}

TEST(Hcw, BoundedConditionKillsSecularDrift) {
    HcwState s0 = zeros();
    s0.x_m = 100.0;
    s0.ydot_mps = hcw_bounded_velocity(s0.x_m, kN);
    EXPECT_NEAR(s0.ydot_mps, -0.21430, 1e-5);
    const double period = 2.0 * constants::kPi / kN;
    for (int k = 1; k <= 10; ++k) {
        const HcwState s = hcw_propagate(s0, k * period);
        EXPECT_LT(std::abs(s.y_m - s0.y_m), 1e-6 * k);
    }
}

TEST(Hcw, InplaneStmMatchesClosedForm) {
    HcwState s0 = zeros();
    s0.x_m = 42.0;
    s0.y_m = 17.0;
    s0.xdot_mps = -0.03;
    s0.ydot_mps = 0.08;
    const double t = 3777.0;
    const auto phi = hcw_stm_inplane(kN, t);
    const double in[4] = {s0.x_m, s0.y_m, s0.xdot_mps, s0.ydot_mps};
    double out[4] = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += phi[4 * r + c] * in[c];
    const HcwState s = hcw_propagate(s0, t);
    EXPECT_NEAR(out[0], s.x_m, 1e-9);
    EXPECT_NEAR(out[1], s.y_m, 1e-9);
    EXPECT_NEAR(out[2], s.xdot_mps, 1e-12);
    EXPECT_NEAR(out[3], s.ydot_mps, 1e-12);
}

TEST(Hcw, InvalidMeanMotionRejected) {
    HcwState s;
    s.n_radps = 0.0;
    EXPECT_THROW(hcw_propagate(s, 1.0), std::domain_error);
}

// HCW tracks the full nonlinear two-body relative motion to first order:
// for a 100 m offset at 650 km the discrepancy after one orbit stays well
// under 1% of the offset.
TEST(Hcw, MatchesNonlinearRelativeMotion) {
    ForceModel fm = ForceModel::keplerian();
    const ReferenceOrbit orb = make_reference_orbit(650e3, InclinationMode::kEquatorialTest, fm);
    const StateVector chief0 = reference_state(orb, 0.0);
    HcwState rel0;
    rel0.n_radps = orb.mean_motion_radps;
    rel0.x_m = 100.0;
    rel0.ydot_mps = hcw_bounded_velocity(rel0.x_m, orb.mean_motion_radps);
    const StateVector deputy0 = lvlh_to_eci(chief0, rel0);
    const double period = orb.period_s();
    for (int i = 1; i <= 12; ++i) {
        const double t = period * i / 12.0;
        const StateVector chief = propagate_to(chief0, t, fm);
        const StateVector deputy = propagate_to(deputy0, t, fm);
        const HcwState rel_true = eci_to_lvlh(chief, deputy);
        const HcwState rel_hcw = hcw_propagate(rel0, t);
        const double err = std::sqrt(std::pow(rel_true.x_m - rel_hcw.x_m, 2) +
                                     std::pow(rel_true.y_m - rel_hcw.y_m, 2) +
                                     std::pow(rel_true.z_m - rel_hcw.z_m, 2));
        EXPECT_LT(err, 1.0);  // < 1% of 100 m
    }
}
