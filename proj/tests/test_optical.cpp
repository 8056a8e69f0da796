#include <gtest/gtest.h>

#include <cmath>

#include "satcluster/optical/curves.hpp"
#include "satcluster/optical/link_budget.hpp"
#include "satcluster/optical/multiplex.hpp"
#include "satcluster/optical/terminal.hpp"

namespace sc = satcluster;

TEST(AntennaGain, IdealTenCmAperture) {
    // independent oracle: (pi*0.1/1.55e-6)^2 = 4.1087e10 -> 106.14 dB
    EXPECT_NEAR(sc::antenna_gain_db(0.1, 1.55e-6, 1.0), 106.14, 0.01);
}

TEST(AntennaGain, DefaultEfficiencyHitsCalibratedGain) {
    EXPECT_NEAR(sc::antenna_gain_db(0.1, 1.55e-6), 105.1, 0.05);
    EXPECT_NEAR(sc::kDefaultApertureEfficiency, 0.79, 0.005);
}

TEST(AntennaGain, DoublingApertureAddsSixDb) {
    const double g1 = sc::antenna_gain_db(0.1, 1.55e-6);
    const double g2 = sc::antenna_gain_db(0.2, 1.55e-6);
    EXPECT_NEAR(g2 - g1, 20.0 * std::log10(2.0), 1e-9);
}

TEST(AntennaGain, MonotoneInApertureAndEfficiency) {
    double prev = -1e30;
    for (double d = 0.02; d <= 0.3; d += 0.02) {
        const double g = sc::antenna_gain_db(d, 1.55e-6);
        EXPECT_GT(g, prev);
        prev = g;
    }
    prev = -1e30;
    for (double eff = 0.1; eff <= 1.0; eff += 0.1) {
        const double g = sc::antenna_gain_db(0.1, 1.55e-6, eff);
        EXPECT_GT(g, prev);
        prev = g;
    }
    EXPECT_THROW(sc::antenna_gain_db(0.1, 1.55e-6, 0.0), std::domain_error);
    EXPECT_THROW(sc::antenna_gain_db(-0.1, 1.55e-6), std::domain_error);
}

TEST(BeamDivergence, PublishedAnchor) {
    EXPECT_NEAR(sc::beam_divergence_rad(0.1, 1.55e-6), 18.9e-6, 0.1e-6);
    // spot at 5000 km is at least 95 m across
    EXPECT_GE(sc::spot_diameter_m(0.1, 1.55e-6, 5000e3), 94.5);
    // doubling the aperture halves the divergence
    EXPECT_NEAR(sc::beam_divergence_rad(0.2, 1.55e-6),
                sc::beam_divergence_rad(0.1, 1.55e-6) / 2.0, 1e-12);
}

TEST(Friis, PublishedAnchorAt5000Km) {
    const sc::OpticalTerminal tx, rx;
    const double pr = sc::friis_received_power_w(tx, rx, 5000e3);
    EXPECT_NEAR(pr, 1.6e-6, 0.05 * 1.6e-6);
}

TEST(Friis, InverseSquare) {
    const sc::OpticalTerminal tx, rx;
    const double p1 = sc::friis_received_power_w(tx, rx, 5000e3);
    const double p2 = sc::friis_received_power_w(tx, rx, 2500e3);
    EXPECT_NEAR(p2 / p1, 4.0, 1e-9);
}

TEST(Friis, UnitIdentity) {
    // G_T = G_R = 1, L = 1, d = lambda/(4*pi): P_R = P_T exactly
    sc::OpticalTerminal t;
    t.gain_db_override = 0.0;
    t.other_loss_db = 0.0;
    const double d = t.wavelength_m / (4.0 * sc::constants::kPi);
    EXPECT_NEAR(sc::friis_received_power_w(t, t, d), t.tx_power_w, 1e-12 * t.tx_power_w);
}

TEST(Friis, FarFieldLawExact) {
    const sc::OpticalTerminal tx, rx;
    const double c0 = sc::friis_received_power_w(tx, rx, 100e3) * 1e10;
    for (double d = 50e3; d <= 5000e3; d *= 2.0) {
        const double c = sc::friis_received_power_w(tx, rx, d) * d * d;
        EXPECT_NEAR(c, c0, 1e-12 * c0);
    }
}

TEST(Friis, NearFieldFlagAndErrors) {
    const sc::OpticalTerminal tx, rx;
    bool flag = false;
    sc::friis_received_power_w(tx, rx, 5e3, &flag);  // inside 10.1 km confocal limit
    EXPECT_TRUE(flag);
    sc::friis_received_power_w(tx, rx, 50e3, &flag);
    EXPECT_FALSE(flag);
    EXPECT_THROW(sc::friis_received_power_w(tx, rx, 0.0), std::domain_error);
    sc::OpticalTerminal bad;
    bad.wavelength_m = 5e-6;
    EXPECT_THROW(sc::friis_received_power_w(bad, rx, 1e5), std::invalid_argument);
}

TEST(NearField, PublishedAnchors) {
    EXPECT_NEAR(sc::near_field_limit_m(0.05, 1.55e-6), 10.1e3, 0.1e3);
    EXPECT_NEAR(sc::near_field_limit_m(0.025, 1.55e-6), 2.5e3, 0.05e3);
    EXPECT_NEAR(sc::near_field_limit_m(0.0125, 1.55e-6), 0.63e3, 0.01e3);
    EXPECT_NEAR(sc::near_field_limit_m(0.00625, 1.55e-6), 0.15e3, 0.01e3);
    // quadratic in beam radius
    EXPECT_NEAR(sc::near_field_limit_m(0.1, 1.55e-6), 4.0 * sc::near_field_limit_m(0.05, 1.55e-6),
                1e-9);
}

TEST(PhotonRate, OokAnchor) {
    // oracle: 1.6e-6 / (20 * 1.282e-19) = 6.24e11
    EXPECT_NEAR(sc::photon_energy_j(1.55e-6), 1.282e-19, 0.001e-19);
    const double rate = sc::photon_limited_rate_bps(1.6e-6, sc::ModulationScheme::ook(), 1.55e-6);
    EXPECT_NEAR(rate, 6.2e11, 0.05e11);
}

TEST(PhotonRate, ShannonFloorAndProportionality) {
    EXPECT_NEAR(sc::kShannonPhotonsPerBit, 2.31, 0.01);
    const double lam = 1.55e-6;
    const auto shannon = sc::ModulationScheme::shannon_limit();
    for (const auto& s : {sc::ModulationScheme::ook(), sc::ModulationScheme::pm_16qam()}) {
        EXPECT_LE(sc::photon_limited_rate_bps(1e-6, s, lam),
                  sc::photon_limited_rate_bps(1e-6, shannon, lam));
        EXPECT_NEAR(sc::photon_limited_rate_bps(2e-6, s, lam),
                    2.0 * sc::photon_limited_rate_bps(1e-6, s, lam), 1e-3);
    }
    sc::ModulationScheme below{"bad", 1.0, {}, {}};
    EXPECT_THROW(sc::photon_limited_rate_bps(1e-6, below, lam), std::invalid_argument);
}

TEST(Dwdm, AggregateAnchors) {
    const auto req = sc::dwdm_aggregate(sc::DwdmPreset::grid_100ghz());
    EXPECT_DOUBLE_EQ(req.aggregate_bps, 9.6e12);
    EXPECT_NEAR(req.required_power_w, 0.38e-3, 0.03 * 0.38e-3);
    // single channel is the identity
    const auto one = sc::dwdm_aggregate(1, 400e9, -18.0);
    EXPECT_DOUBLE_EQ(one.aggregate_bps, 400e9);
    EXPECT_NEAR(one.required_power_w, std::pow(10.0, -1.8) * 1e-3, 1e-12);
    // 75 GHz grid packs 32 channels for 12.8 Tbps
    EXPECT_DOUBLE_EQ(sc::dwdm_aggregate(sc::DwdmPreset::grid_75ghz()).aggregate_bps, 12.8e12);
    EXPECT_THROW(sc::dwdm_aggregate(0, 400e9, -18.0), std::invalid_argument);
}

TEST(MaxDwdmDistance, PublishedAnchor) {
    const sc::OpticalTerminal tx, rx;
    const auto req = sc::dwdm_aggregate(sc::DwdmPreset::grid_100ghz());
    const auto res = sc::max_dwdm_distance(tx, rx, req.required_power_w);
    ASSERT_EQ(res.feasibility, sc::DwdmFeasibility::kFeasible);
    EXPECT_NEAR(res.distance_m, 300e3, 0.1 * 300e3);
    // exact inverse of the Friis budget at the requirement
    EXPECT_NEAR(sc::friis_received_power_w(tx, rx, res.distance_m), req.required_power_w,
                1e-4 * req.required_power_w);
}

TEST(MaxDwdmDistance, ScalingAndEdges) {
    const sc::OpticalTerminal tx, rx;
    const double p0 = sc::dwdm_aggregate(sc::DwdmPreset::grid_100ghz()).required_power_w;
    const double d1 = sc::max_dwdm_distance(tx, rx, p0).distance_m;
    const double d4 = sc::max_dwdm_distance(tx, rx, 4.0 * p0).distance_m;
    EXPECT_NEAR(d4, d1 / 2.0, 2.0);
    // requirement above the power available at the near-field boundary
    const auto inf = sc::max_dwdm_distance(tx, rx, 1e6);
    EXPECT_EQ(inf.feasibility, sc::DwdmFeasibility::kInfeasible);
    const auto unb = sc::max_dwdm_distance(tx, rx, 0.0);
    EXPECT_EQ(unb.feasibility, sc::DwdmFeasibility::kUnbounded);
}

TEST(Multiplex, PublishedArrayAnchors) {
    const auto p1 = sc::spatial_multiplex_plan(0.1, 1.55e-6, 2.5e3, 9.6e12);
    EXPECT_EQ(p1.array_dim, 2);
    EXPECT_NEAR(p1.per_beam_aperture_m, 0.05, 1e-12);
    EXPECT_DOUBLE_EQ(p1.aggregate_bandwidth_bps, 4 * 9.6e12);
    const auto p2 = sc::spatial_multiplex_plan(0.1, 1.55e-6, 0.63e3, 9.6e12);
    EXPECT_EQ(p2.array_dim, 4);
    const auto p3 = sc::spatial_multiplex_plan(0.1, 1.55e-6, 0.15e3, 9.6e12);
    EXPECT_EQ(p3.array_dim, 8);
}

TEST(Multiplex, ConsistentWithNearFieldLimit) {
    for (double d : {0.12e3, 0.3e3, 0.8e3, 2.0e3, 6.0e3}) {
        const auto plan = sc::spatial_multiplex_plan(0.1, 1.55e-6, d, 1.0);
        EXPECT_FALSE(plan.far_field);
        EXPECT_NEAR(plan.max_distance_m,
                    sc::near_field_limit_m(0.1 / (2.0 * plan.array_dim), 1.55e-6),
                    1e-9 * plan.max_distance_m);
        EXPECT_GE(plan.max_distance_m, d);
        EXPECT_LE(plan.array_dim * plan.per_beam_aperture_m, 0.1 + 1e-12);
    }
}

TEST(Multiplex, FarFieldFallback) {
    const auto plan = sc::spatial_multiplex_plan(0.1, 1.55e-6, 50e3, 9.6e12);
    EXPECT_TRUE(plan.far_field);
    EXPECT_EQ(plan.array_dim, 1);
    EXPECT_DOUBLE_EQ(plan.aggregate_bandwidth_bps, 9.6e12);
}

TEST(Curves, InverseSquareAndOrdering) {
    const sc::OpticalTerminal tx, rx;
    const std::vector<sc::ModulationScheme> schemes = {sc::ModulationScheme::shannon_limit(),
                                                       sc::ModulationScheme::ook(),
                                                       sc::ModulationScheme::pm_16qam()};
    std::vector<double> grid;
    for (double d = 100e3; d <= 6400e3; d *= 2.0) grid.push_back(d);
    const auto curve = sc::bandwidth_vs_distance_curve(tx, rx, schemes, grid);
    ASSERT_EQ(curve.size(), schemes.size() * grid.size());
    // rate * d^2 constant per scheme
    for (std::size_t s = 0; s < schemes.size(); ++s) {
        const double c0 = curve[s].bandwidth_bps * curve[s].distance_m * curve[s].distance_m;
        for (std::size_t k = 1; k < grid.size(); ++k) {
            const auto& smp = curve[k * schemes.size() + s];
            EXPECT_NEAR(smp.bandwidth_bps * smp.distance_m * smp.distance_m, c0, 1e-3 * c0);
            EXPECT_EQ(smp.regime, "far-field");
        }
    }
    // Shannon > OOK > PM-16QAM at every distance
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double shannon = curve[k * 3 + 0].bandwidth_bps;
        const double ook = curve[k * 3 + 1].bandwidth_bps;
        const double qam = curve[k * 3 + 2].bandwidth_bps;
        EXPECT_GT(shannon, ook);
        EXPECT_GT(ook, qam);
    }
}

TEST(Curves, OokAnchorAt5000KmAndMuxRegimes) {
    const sc::OpticalTerminal tx, rx;
    const auto curve = sc::bandwidth_vs_distance_curve(
        tx, rx, {sc::ModulationScheme::ook()}, {0.2e3, 1.0e3, 5.0e3, 5000e3});
    EXPECT_EQ(curve[0].regime, "mux-7x7");
    EXPECT_EQ(curve[1].regime, "mux-3x3");
    EXPECT_EQ(curve[2].regime, "mux-1x1");
    EXPECT_EQ(curve[3].regime, "far-field");
    // consistent with photon_limited_rate at the Friis power; ~6.2e11 bps
    const double pr = sc::friis_received_power_w(tx, rx, 5000e3);
    EXPECT_NEAR(curve[3].bandwidth_bps,
                sc::photon_limited_rate_bps(pr, sc::ModulationScheme::ook(), tx.wavelength_m),
                1.0);
    EXPECT_NEAR(curve[3].bandwidth_bps, 6.2e11, 0.05 * 6.2e11);
}

TEST(Curves, RejectsUnsortedGrid) {
    const sc::OpticalTerminal tx, rx;
    EXPECT_THROW(
        sc::bandwidth_vs_distance_curve(tx, rx, {sc::ModulationScheme::ook()}, {2e3, 1e3}),
        std::invalid_argument);
}
