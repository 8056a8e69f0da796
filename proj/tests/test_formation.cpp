#include <gtest/gtest.h>

#include <cmath>

#include "satcluster/formation/cluster.hpp"
#include "satcluster/formation/metrics.hpp"
#include "satcluster/formation/trajectory.hpp"

namespace sc = satcluster;

namespace {

sc::ForceModel kep() { return sc::ForceModel::keplerian(); }

sc::Cluster default_cluster() { return sc::generate_cluster({}, kep()); }

}  // namespace

TEST(Lattice, DefaultCountAndCenter) {
    const auto sites = sc::lattice_sites(9);
    EXPECT_EQ(sites.size(), 81u);
    int n_center = 0;
    for (const auto& s : sites)
        if (s.i == 0 && s.j == 0) ++n_center;
    EXPECT_EQ(n_center, 1);
}

TEST(Lattice, QuadraticScaling) {
    // disk radius grows linearly with n_side, count roughly quadratically
    EXPECT_EQ(sc::lattice_sites(3).size(), 13u);
    EXPECT_EQ(sc::lattice_sites(5).size(), 29u);
    EXPECT_EQ(sc::lattice_sites(9).size(), 81u);
    sc::ClusterSpec spec;
    double prev_r = 0.0;
    for (int n_side : {3, 5, 9}) {
        spec.n_side = n_side;
        const auto cl = sc::generate_cluster(spec, kep());
        const double r = sc::scaled_lattice_radius(cl);
        EXPECT_NEAR(r, 100.0 * (n_side + 1) / 2, 1e-9);
        EXPECT_GT(r, prev_r);
        prev_r = r;
    }
}

TEST(GenerateCluster, DefaultSpec) {
    const auto cl = default_cluster();
    EXPECT_EQ(cl.states.size(), 81u);
    EXPECT_EQ(cl.sites[cl.s0_index].i, 0);
    EXPECT_EQ(cl.sites[cl.s0_index].j, 0);
    // S0 sits exactly on the reference orbit
    const auto ref = sc::reference_state(cl.orbit, 0.0);
    EXPECT_LT((cl.states[cl.s0_index].position_m - ref.position_m).norm(), 1e-9);
    EXPECT_LT((cl.states[cl.s0_index].velocity_mps - ref.velocity_mps).norm(), 1e-12);
    // S1 is the max along-track site
    EXPECT_EQ(cl.sites[cl.s1_index].i, 0);
    EXPECT_EQ(cl.sites[cl.s1_index].j, 5);
}

TEST(GenerateCluster, EnergyEqualized) {
    const sc::ForceModel fm;  // J2 on, default ClusterSpec (rho = 1)
    const auto cl = sc::generate_cluster({}, fm);
    const auto& s0 = cl.states[cl.s0_index];
    const double e0 = sc::specific_energy(s0.position_m, s0.velocity_mps, kep());
    for (const auto& st : cl.states) {
        const double e = sc::specific_energy(st.position_m, st.velocity_mps, kep());
        EXPECT_LT(std::abs(e - e0) / std::abs(e0), 1e-9);
    }
}

TEST(GenerateCluster, SingleSatellite) {
    sc::ClusterSpec spec;
    spec.n_side = 1;
    const auto cl = sc::generate_cluster(spec, kep());
    ASSERT_EQ(cl.states.size(), 1u);
    const auto ref = sc::reference_state(cl.orbit, 0.0);
    EXPECT_LT((cl.states[0].position_m - ref.position_m).norm(), 1e-9);
}

TEST(GenerateCluster, InvariantViolations) {
    sc::ClusterSpec spec;
    spec.n_side = 4;
    EXPECT_THROW(sc::generate_cluster(spec, kep()), std::invalid_argument);
    spec = {};
    spec.axis_ratio_rho = 1.5;
    EXPECT_THROW(sc::generate_cluster(spec, kep()), std::invalid_argument);
    spec = {};
    spec.scaled_spacing_m = -1.0;
    EXPECT_THROW(sc::generate_cluster(spec, kep()), std::invalid_argument);
}

TEST(SimulateCluster, KeplerianClosureWithinOneMeter) {
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 48, 4);
    const std::size_t last = traj.sample_times_s.size() - 1;
    for (std::size_t i = 0; i < traj.n_satellites(); ++i) {
        const auto& a = traj.lvlh[0][i];
        const auto& b = traj.lvlh[last][i];
        const double d = std::sqrt(std::pow(a.x_m - b.x_m, 2) + std::pow(a.y_m - b.y_m, 2) +
                                   std::pow(a.z_m - b.z_m, 2));
        EXPECT_LT(d, 1.0);
    }
}

TEST(SimulateCluster, BoundingEllipseBox) {
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 48, 4);
    for (const auto& snap : traj.lvlh)
        for (const auto& s : snap) {
            EXPECT_LT(std::abs(s.x_m), 500.0 * 1.05);
            EXPECT_LT(std::abs(s.y_m), 1000.0 * 1.05);
        }
}

TEST(SimulateCluster, SingleSatelliteZeroRelativeMotion) {
    sc::ClusterSpec spec;
    spec.n_side = 1;
    const auto cl = sc::generate_cluster(spec, kep());
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 24, 1);
    for (const auto& snap : traj.lvlh) {
        EXPECT_LT(std::abs(snap[0].x_m), 1e-6);
        EXPECT_LT(std::abs(snap[0].y_m), 1e-6);
        EXPECT_LT(std::abs(snap[0].z_m), 1e-6);
    }
}

TEST(SimulateCluster, RejectsBadArguments) {
    const auto cl = default_cluster();
    EXPECT_THROW(sc::simulate_cluster(cl, 0, kep()), std::invalid_argument);
    EXPECT_THROW(sc::simulate_cluster(cl, 1, kep(), {}, 6), std::invalid_argument);
    EXPECT_THROW(sc::simulate_cluster(sc::Cluster{}, 1, kep()), std::invalid_argument);
}

TEST(NeighborDistances, DirectBandTwoCyclesPerOrbit) {
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 2, kep(), {}, 96, 4);
    const auto rep = sc::neighbor_distances(traj, sc::Neighborhood::kDirect4);
    ASSERT_EQ(rep.series.size(), 4u);
    const double period = traj.orbit.period_s();
    for (const auto& ser : rep.series) {
        EXPECT_EQ(ser.kind, "direct");
        EXPECT_GT(ser.min_m, 95.0);
        EXPECT_LT(ser.max_m, 210.0);
        const double p = sc::series_period(rep.t_s, ser.distance_m);
        EXPECT_NEAR(p, period / 2.0, 0.01 * period);
    }
}

TEST(NeighborDistances, DiagonalBand) {
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 96, 4);
    const auto rep = sc::neighbor_distances(traj, sc::Neighborhood::kFull8);
    int n_diag = 0;
    for (const auto& ser : rep.series) {
        if (ser.kind != "diagonal") continue;
        ++n_diag;
        EXPECT_NEAR(ser.min_m, 141.4, 5.0);
        EXPECT_NEAR(ser.max_m, 282.8, 8.0);
    }
    EXPECT_EQ(n_diag, 4);
}

TEST(NeighborDistances, PairSeparationPeriodIsHalfOrbit) {
    // every pair separation has period T/2 under the scaled-rotation design
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 2, kep(), {}, 96, 4);
    const double period = traj.orbit.period_s();
    const std::size_t picks[][2] = {{0, 1}, {3, 17}, {12, 68}, {25, 80}, {40, 60}, {7, 52}};
    for (const auto& pk : picks) {
        std::vector<double> d;
        d.reserve(traj.sample_times_s.size());
        for (std::size_t k = 0; k < traj.sample_times_s.size(); ++k) {
            const auto& a = traj.lvlh[k][pk[0]];
            const auto& b = traj.lvlh[k][pk[1]];
            d.push_back(std::hypot(b.x_m - a.x_m, b.y_m - a.y_m));
        }
        const double p = sc::series_period(traj.sample_times_s, d);
        EXPECT_NEAR(p, period / 2.0, 0.01 * period);
    }
}

TEST(NeighborDistances, MaxMinRatioIsTwo) {
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 192, 4);
    const auto rep = sc::neighbor_distances(traj, sc::Neighborhood::kFull8);
    for (const auto& ser : rep.series) EXPECT_NEAR(ser.max_m / ser.min_m, 2.0, 0.04);
}

TEST(ShapeMetrics, AxisRatioTwoAllSamples) {
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 48, 4);
    const auto rep = sc::shape_metrics(traj);
    for (const auto& s : rep.samples) EXPECT_NEAR(s.axis_ratio, 2.0, 0.04);
}

TEST(ShapeMetrics, TwoShapeCyclesPerOrbit) {
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 2, kep(), {}, 96, 4);
    const auto rep = sc::shape_metrics(traj);
    EXPECT_EQ(rep.cycles_per_orbit, 2);
    EXPECT_NEAR(rep.cycle_period_s, traj.orbit.period_s() / 2.0, 0.01 * traj.orbit.period_s());
}

TEST(ShapeMetrics, S1ApoapsisTiming) {
    // S1 (max along-track at t = 0) tops out at +R/2 altitude at t = 3T/12
    // and bottoms out at 9T/12
    const auto cl = default_cluster();
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 48, 4);
    const auto& s1_quarter = traj.lvlh[12][traj.s1_index];   // t = 3T/12
    const auto& s1_three_q = traj.lvlh[36][traj.s1_index];   // t = 9T/12
    EXPECT_NEAR(s1_quarter.x_m, 500.0, 5.0);
    EXPECT_NEAR(s1_three_q.x_m, -500.0, 5.0);
}

TEST(ShapeMetrics, RejectsTinyCluster) {
    sc::ClusterSpec spec;
    spec.n_side = 1;
    const auto cl = sc::generate_cluster(spec, kep());
    const auto traj = sc::simulate_cluster(cl, 1, kep(), {}, 24, 1);
    EXPECT_THROW(sc::shape_metrics(traj), std::invalid_argument);
}

TEST(OutOfPlane, InPlaneMetricsUnchanged) {
    sc::ClusterSpec flat_spec;
    sc::ClusterSpec z_spec;
    z_spec.out_of_plane_amp_m = 100.0;
    const auto t0 = sc::simulate_cluster(sc::generate_cluster(flat_spec, kep()), 1, kep(), {}, 48, 4);
    const auto t1 = sc::simulate_cluster(sc::generate_cluster(z_spec, kep()), 1, kep(), {}, 48, 4);
    double worst = 0.0;
    for (std::size_t k = 0; k < t0.sample_times_s.size(); ++k)
        for (std::size_t i = 0; i < t0.n_satellites(); ++i) {
            worst = std::max(worst, std::abs(t0.lvlh[k][i].x_m - t1.lvlh[k][i].x_m));
            worst = std::max(worst, std::abs(t0.lvlh[k][i].y_m - t1.lvlh[k][i].y_m));
        }
    EXPECT_LT(worst, 0.001 * 1000.0);  // 0.1% of the cluster scale
}
