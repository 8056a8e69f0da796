#include <gtest/gtest.h>

#include <cmath>

#include "satcluster/orbit/reference_orbit.hpp"

using namespace satcluster;

TEST(ReferenceOrbit, MeanMotionAt650km) {
    ForceModel fm;
    const double n = mean_motion(7.028137e6, fm);
    EXPECT_NEAR(n, 1.07154e-3, 1e-9);
    // period just under 98 minutes
    EXPECT_NEAR(2.0 * constants::kPi / n / 60.0, 97.7, 0.05);
}

TEST(ReferenceOrbit, KeplerScaling) {
    ForceModel fm;
    const double a = 7.028137e6;
    EXPECT_NEAR(mean_motion(4.0 * a, fm), mean_motion(a, fm) / 8.0, 1e-18);
}

TEST(ReferenceOrbit, MeanMotionRejectsNonpositive) {
    ForceModel fm;
    EXPECT_THROW(mean_motion(0.0, fm), std::domain_error);
    EXPECT_THROW(mean_motion(-1.0, fm), std::domain_error);
}

TEST(ReferenceOrbit, SunSyncInclinationAt650km) {
    ForceModel fm;
    const double i = sun_sync_inclination(650e3, fm);
    EXPECT_NEAR(i * 180.0 / constants::kPi, 97.99, 0.02);
}

TEST(ReferenceOrbit, SunSyncRoundTrip) {
    ForceModel fm;
    const double target = 2.0 * constants::kPi / constants::kTropicalYearS;
    const double i = sun_sync_inclination(650e3, fm);
    const double rate = nodal_precession_rate(fm.re_m + 650e3, i, fm);
    EXPECT_LT(std::abs(rate / target - 1.0), 1e-9);
}

TEST(ReferenceOrbit, ZeroPrecessionIsPolar) {
    ForceModel fm;
    EXPECT_NEAR(sun_sync_inclination(650e3, fm, 0.0) * 180.0 / constants::kPi, 90.0, 1e-12);
}

TEST(ReferenceOrbit, NoSolutionAtHighAltitude) {
    ForceModel fm;
    // at geostationary altitude the required cos(i) exceeds 1 in magnitude
    EXPECT_THROW(sun_sync_inclination(36000e3, fm), std::domain_error);
}

TEST(ReferenceOrbit, MakeReferenceOrbitConsistent) {
    ForceModel fm;
    const ReferenceOrbit orb = make_reference_orbit(650e3, InclinationMode::kSunSynchronous, fm);
    EXPECT_EQ(orb.semi_major_axis_m, fm.re_m + 650e3);
    EXPECT_LT(std::abs(orb.mean_motion_radps / mean_motion(orb.semi_major_axis_m, fm) - 1.0),
              1e-12);
    EXPECT_GT(orb.inclination_rad, constants::kPi / 2.0);
}

TEST(ReferenceOrbit, ReferenceStateGeometry) {
    ForceModel fm;
    const ReferenceOrbit orb = make_reference_orbit(650e3, InclinationMode::kSunSynchronous, fm);
    for (const double t : {0.0, 1000.0, 4321.0}) {
        const StateVector s = reference_state(orb, t);
        EXPECT_NEAR(s.position_m.norm(), orb.semi_major_axis_m, 1e-6);
        EXPECT_NEAR(s.velocity_mps.norm(), orb.mean_motion_radps * orb.semi_major_axis_m, 1e-9);
        EXPECT_NEAR(dot(s.position_m, s.velocity_mps), 0.0, 1e-3);
    }
}
