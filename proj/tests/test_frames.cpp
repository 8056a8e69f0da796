#include <gtest/gtest.h>

#include <cmath>

#include "satcluster/orbit/frames.hpp"
#include "satcluster/orbit/reference_orbit.hpp"

using namespace satcluster;

namespace {

StateVector chief_650() {
    ForceModel fm;
    const ReferenceOrbit orb = make_reference_orbit(650e3, InclinationMode::kSunSynchronous, fm);
    return reference_state(orb, 1234.5);
}

}  // namespace

TEST(Frames, IdenticalStatesGiveZero) {
    const StateVector c = chief_650();
    const HcwState rel = eci_to_lvlh(c, c);
    EXPECT_NEAR(rel.x_m, 0.0, 1e-12);
    EXPECT_NEAR(rel.y_m, 0.0, 1e-12);
    EXPECT_NEAR(rel.z_m, 0.0, 1e-12);
    EXPECT_NEAR(rel.xdot_mps, 0.0, 1e-15);
    EXPECT_NEAR(rel.ydot_mps, 0.0, 1e-15);
    EXPECT_NEAR(rel.zdot_mps, 0.0, 1e-15);
}

TEST(Frames, RadialOffsetSeesFrameRotation) {
    const StateVector c = chief_650();
    StateVector d = c;
    const Vec3 r_hat = normalized(c.position_m);
    d.position_m += r_hat * 100.0;  // +100 m radial, same ECI velocity
    const HcwState rel = eci_to_lvlh(c, d);
    const double n = mean_motion(c.position_m.norm(), ForceModel{});
    EXPECT_NEAR(rel.x_m, 100.0, 1e-9);
    EXPECT_NEAR(rel.y_m, 0.0, 1e-9);
    EXPECT_NEAR(rel.z_m, 0.0, 1e-9);
    // rotating frame sweeps the offset backwards along-track at rate n
    EXPECT_NEAR(rel.ydot_mps, -n * 100.0, 1e-6);
    EXPECT_NEAR(rel.ydot_mps, -0.10715, 2e-5);
}

TEST(Frames, RoundTripIdentity) {
    const StateVector c = chief_650();
    StateVector d = c;
    d.position_m += Vec3{40.0, -75.0, 110.0};
    d.velocity_mps += Vec3{0.02, 0.11, -0.07};
    const StateVector back = lvlh_to_eci(c, eci_to_lvlh(c, d));
    EXPECT_LT((back.position_m - d.position_m).norm(), 1e-9);
    EXPECT_LT((back.velocity_mps - d.velocity_mps).norm(), 1e-12);
}

TEST(Frames, DegenerateChiefRejected) {
    StateVector c;
    c.position_m = {7.0e6, 0.0, 0.0};
    c.velocity_mps = {1000.0, 0.0, 0.0};  // r x v = 0
    EXPECT_THROW(eci_to_lvlh(c, c), std::domain_error);
}
