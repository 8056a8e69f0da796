#include <gtest/gtest.h>

#include <cmath>

#include "satcluster/formation/drift.hpp"
#include "satcluster/formation/optimize.hpp"

namespace sc = satcluster;

namespace {

sc::DriftOptions fast_opts(int n_orbits = 15) {
    sc::DriftOptions opt;
    opt.n_orbits = n_orbits;
    opt.n_threads = 4;
    return opt;
}

}  // namespace

TEST(DriftMetric, KeplerianFormationIsFree) {
    // exactly periodic free-fall pattern: budget below the numerical floor
    const auto kep = sc::ForceModel::keplerian();
    sc::ClusterSpec spec;
    for (double rho : {1.0, 1.005}) {
        spec.axis_ratio_rho = rho;
        const auto rep = sc::j2_drift_metric(spec, kep, fast_opts(10));
        EXPECT_LT(rep.metric_mps_per_year_per_km, 0.1);
    }
}

TEST(DriftMetric, ReportInvariants) {
    const sc::ForceModel fm;
    const auto rep = sc::j2_drift_metric({}, fm, fast_opts(10));
    ASSERT_EQ(rep.per_satellite.size(), 81u);
    double max_dv = 0.0, max_r = 0.0;
    for (const auto& d : rep.per_satellite) {
        EXPECT_GE(d.dv_mps_per_year, 0.0);
        max_dv = std::max(max_dv, d.dv_mps_per_year);
        max_r = std::max(max_r, d.max_radius_km);
    }
    EXPECT_DOUBLE_EQ(rep.max_dv_mps_per_year, max_dv);
    EXPECT_DOUBLE_EQ(rep.max_radius_km, max_r);
    EXPECT_DOUBLE_EQ(rep.metric_mps_per_year_per_km, max_dv / max_r);
}

TEST(DriftMetric, DefaultCadenceIsOnePeriod) {
    const sc::ForceModel fm;
    const auto cl = sc::generate_cluster({}, fm);
    const auto rep = sc::j2_drift_metric({}, fm, fast_opts(6));
    EXPECT_NEAR(rep.correction_cadence_s, cl.orbit.period_s(), 1e-9);
}

TEST(DriftMetric, UncorrectedMagnitude) {
    // frozen regression band for the rho = 1 cluster under J2: tens of
    // m/s/yr per km, far above the corrected optimum
    const sc::ForceModel fm;
    const auto rep = sc::j2_drift_metric({}, fm, fast_opts());
    EXPECT_GT(rep.metric_mps_per_year_per_km, 30.0);
    EXPECT_LT(rep.metric_mps_per_year_per_km, 200.0);
}

TEST(DriftMetric, CorrectedBelowThreeAtOptimum) {
    const sc::ForceModel fm;
    sc::ClusterSpec spec;
    spec.axis_ratio_rho = 0.99934;  // measured optimum of this model
    const auto rep = sc::j2_drift_metric(spec, fm, fast_opts());
    EXPECT_LT(rep.metric_mps_per_year_per_km, 3.0);
}

TEST(DriftMetric, DeterministicAcrossThreadCounts) {
    const sc::ForceModel fm;
    auto o1 = fast_opts(6);
    o1.n_threads = 1;
    auto o4 = fast_opts(6);
    o4.n_threads = 4;
    const auto r1 = sc::j2_drift_metric({}, fm, o1);
    const auto r4 = sc::j2_drift_metric({}, fm, o4);
    EXPECT_DOUBLE_EQ(r1.metric_mps_per_year_per_km, r4.metric_mps_per_year_per_km);
    for (std::size_t i = 0; i < r1.per_satellite.size(); ++i)
        EXPECT_DOUBLE_EQ(r1.per_satellite[i].dv_mps_per_year, r4.per_satellite[i].dv_mps_per_year);
}

TEST(DriftMetric, SubOrbitCadenceSameOrder) {
    const sc::ForceModel fm;
    auto opt = fast_opts(8);
    const auto r_orbit = sc::j2_drift_metric({}, fm, opt);
    opt.correction_cadence_s = sc::generate_cluster({}, fm).orbit.period_s() / 2.0;
    const auto r_half = sc::j2_drift_metric({}, fm, opt);
    EXPECT_GT(r_half.metric_mps_per_year_per_km, 0.2 * r_orbit.metric_mps_per_year_per_km);
    EXPECT_LT(r_half.metric_mps_per_year_per_km, 5.0 * r_orbit.metric_mps_per_year_per_km);
}

TEST(OptimizeAxisRatio, FindsSharpMinimum) {
    const sc::ForceModel fm;
    const auto res = sc::optimize_axis_ratio({}, 0.99, 1.01, 1e-4, fm, fast_opts());
    EXPECT_FALSE(res.flat_objective);
    EXPECT_NEAR(res.rho_star, 0.9993, 5e-4);  // frozen measured optimum
    EXPECT_LT(res.drift_at_star, 3.0);
    // minimizer property: strictly better than the uncorrected cluster
    sc::ClusterSpec spec;
    const double at_one = sc::j2_drift_metric(spec, fm, fast_opts()).metric_mps_per_year_per_km;
    EXPECT_LT(res.drift_at_star, at_one);
    EXPECT_FALSE(res.curve.empty());
}

TEST(OptimizeAxisRatio, FlatObjectiveWithoutJ2) {
    const auto kep = sc::ForceModel::keplerian();
    const auto res = sc::optimize_axis_ratio({}, 0.99, 1.01, 1e-4, kep, fast_opts(8));
    EXPECT_TRUE(res.flat_objective);
    EXPECT_DOUBLE_EQ(res.rho_star, 1.0);  // range midpoint
}

TEST(OptimizeAxisRatio, RejectsBadRange) {
    const sc::ForceModel fm;
    EXPECT_THROW(sc::optimize_axis_ratio({}, 1.01, 0.99, 1e-4, fm), std::invalid_argument);
    EXPECT_THROW(sc::optimize_axis_ratio({}, 0.98, 1.0, 1e-4, fm), std::invalid_argument);
    EXPECT_THROW(sc::optimize_axis_ratio({}, 0.99, 1.0, 0.0, fm), std::invalid_argument);
}

TEST(OptimizeAxisRatio, Deterministic) {
    const sc::ForceModel fm;
    const auto a = sc::optimize_axis_ratio({}, 0.997, 1.002, 1e-4, fm, fast_opts(8));
    const auto b = sc::optimize_axis_ratio({}, 0.997, 1.002, 1e-4, fm, fast_opts(8));
    EXPECT_DOUBLE_EQ(a.rho_star, b.rho_star);
    EXPECT_DOUBLE_EQ(a.drift_at_star, b.drift_at_star);
}
