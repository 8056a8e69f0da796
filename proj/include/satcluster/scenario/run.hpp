#pragma once

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satcluster/economics/learning_curve.hpp"
#include "satcluster/economics/power_price.hpp"
#include "satcluster/economics/starship.hpp"
#include "satcluster/formation/cluster.hpp"
#include "satcluster/formation/drift.hpp"
#include "satcluster/formation/metrics.hpp"
#include "satcluster/formation/optimize.hpp"
#include "satcluster/formation/trajectory.hpp"
#include "satcluster/io/csv.hpp"
#include "satcluster/optical/curves.hpp"
#include "satcluster/optical/multiplex.hpp"
#include "satcluster/radiation/model.hpp"
#include "satcluster/scenario/config.hpp"
#include "satcluster/scenario/datasets.hpp"

namespace satcluster {

struct EmittedFile {
    std::string name;
    std::uint64_t fnv1a = 0;
};

struct RunReport {
    ScenarioKind kind = ScenarioKind::kFormation;
    std::filesystem::path out_dir;
    std::vector<EmittedFile> files;
    std::vector<std::pair<std::string, std::string>> headline;
};

struct RunOptions {
    bool force = false;
    unsigned n_threads = 0;
};

namespace detail {

inline ClusterSpec cluster_spec_from(const ScenarioConfig& cfg) {
    ClusterSpec spec;
    spec.n_side = cfg.n_side;
    spec.scaled_spacing_m = cfg.scaled_spacing_m;
    spec.altitude_m = cfg.altitude_m;
    spec.axis_ratio_rho = cfg.rho;
    spec.out_of_plane_amp_m = cfg.out_of_plane_amp_m;
    return spec;
}

inline ForceModel force_model_from(const ScenarioConfig& cfg) {
    return cfg.include_j2 ? ForceModel{} : ForceModel::keplerian();
}

inline OpticalTerminal terminal_from(const ScenarioConfig& cfg) {
    if (cfg.terminal_file) return load_terminal_dataset(cfg.config_dir / *cfg.terminal_file);
    OpticalTerminal t;
    t.tx_power_w = cfg.tx_power_w;
    t.wavelength_m = cfg.wavelength_m;
    t.aperture_diameter_m = cfg.aperture_m;
    t.other_loss_db = cfg.other_loss_db;
    return t;
}

inline std::vector<ModulationScheme> schemes_from(const ScenarioConfig& cfg) {
    if (cfg.schemes_file) return load_schemes_dataset(cfg.config_dir / *cfg.schemes_file);
    return {ModulationScheme::shannon_limit(), ModulationScheme::ook(),
            ModulationScheme::pm_16qam()};
}

inline DwdmPreset dwdm_preset_from(const ScenarioConfig& cfg) {
    if (cfg.dwdm_grid == "100ghz") return DwdmPreset::grid_100ghz();
    if (cfg.dwdm_grid == "75ghz") return DwdmPreset::grid_75ghz();
    throw ConfigError("dwdm_grid must be \"100ghz\" or \"75ghz\", got \"" + cfg.dwdm_grid + "\"");
}

inline std::vector<SusceptibilityProfile> profiles_from(const ScenarioConfig& cfg) {
    if (cfg.profiles_file) return load_profiles_dataset(cfg.config_dir / *cfg.profiles_file);
    return default_susceptibility_profiles();
}

inline std::vector<SatellitePlatform> platforms_from(const ScenarioConfig& cfg) {
    if (cfg.platforms_file) return load_platforms_dataset(cfg.config_dir / *cfg.platforms_file);
    return default_platforms();
}

inline std::vector<std::pair<double, double>> history_from(const ScenarioConfig& cfg) {
    if (cfg.history_file) return load_price_history_dataset(cfg.config_dir / *cfg.history_file);
    return sample_price_history();
}

inline void emit(RunReport& rep, const RunOptions& opt, const std::string& name,
                 const CsvTable& table) {
    const std::filesystem::path path = rep.out_dir / name;
    if (std::filesystem::exists(path) && !opt.force)
        throw ConfigError("output file exists (use --force to overwrite): " + path.string());
    const std::string content = table.to_string();
    write_file_atomic(path, content);
    rep.files.push_back({name, fnv1a_64(content)});
}

inline void headline(RunReport& rep, const std::string& key, double value) {
    rep.headline.push_back({key, format_double(value)});
}

}  // namespace detail

/// Schema plus module-invariant checks without executing the scenario.
/// Referenced dataset files must exist and parse.
inline void validate_scenario_config(const ScenarioConfig& cfg) {
    try {
        switch (cfg.kind) {
            case ScenarioKind::kFormation:
            case ScenarioKind::kFigure2:
            case ScenarioKind::kFigure3:
                detail::cluster_spec_from(cfg).validate();
                if (cfg.samples_per_orbit < 12)
                    throw std::invalid_argument("samples_per_orbit must be >= 12");
                break;
            case ScenarioKind::kDriftStudy:
                detail::cluster_spec_from(cfg).validate();
                if (cfg.n_orbits < 1) throw std::invalid_argument("n_orbits must be >= 1");
                if (cfg.optimize) {
                    if (!(cfg.rho_lo < cfg.rho_hi) || cfg.rho_lo < 0.99 || cfg.rho_hi > 1.01)
                        throw std::invalid_argument(
                            "optimization range [rho_lo, rho_hi] must lie inside [0.99, 1.01]");
                    if (!(cfg.rho_tol > 0.0))
                        throw std::invalid_argument("rho_tol must be positive");
                }
                break;
            case ScenarioKind::kLinkBudget:
                detail::terminal_from(cfg).validate();
                for (const auto& s : detail::schemes_from(cfg)) s.validate();
                detail::dwdm_preset_from(cfg);
                if (!(cfg.distance_m > 0.0))
                    throw std::invalid_argument("distance_m must be positive");
                break;
            case ScenarioKind::kFigure1:
                detail::terminal_from(cfg).validate();
                for (const auto& s : detail::schemes_from(cfg)) s.validate();
                detail::dwdm_preset_from(cfg);
                if (!(cfg.distance_min_m > 0.0) || !(cfg.distance_max_m > cfg.distance_min_m))
                    throw std::invalid_argument("need 0 < distance_min_m < distance_max_m");
                if (cfg.n_points < 2) throw std::invalid_argument("n_points must be >= 2");
                break;
            case ScenarioKind::kRadiation: {
                const OrbitEnvironment env{cfg.dose_rate_rad_per_year, cfg.mission_years};
                env.validate();
                for (const auto& p : detail::profiles_from(cfg)) p.validate();
                if (cfg.inferences_per_year && !(*cfg.inferences_per_year > 0.0))
                    throw std::invalid_argument("inferences_per_year must be positive");
                break;
            }
            case ScenarioKind::kEconomics: {
                const LearningCurveModel model{cfg.anchor_price_usd_per_kg,
                                               cfg.anchor_cumulative_mass_t, cfg.learning_rate};
                model.validate();
                if (!(cfg.target_price_usd_per_kg > 0.0) ||
                    cfg.target_price_usd_per_kg >= model.anchor_price_usd_per_kg)
                    throw std::invalid_argument(
                        "target_price_usd_per_kg must be positive and below the anchor price");
                detail::history_from(cfg);
                break;
            }
            case ScenarioKind::kTable1:
                for (const auto& p : detail::platforms_from(cfg)) p.validate();
                if (cfg.price_scenarios_usd_per_kg.empty())
                    throw std::invalid_argument("price_scenarios_usd_per_kg must not be empty");
                for (const double p : cfg.price_scenarios_usd_per_kg)
                    if (!(p > 0.0))
                        throw std::invalid_argument("price scenarios must be positive");
                break;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invariant violation: ") + e.what());
    }
}

namespace detail {

inline std::string role_of(const ClusterTrajectory& traj, std::size_t i) {
    if (i == traj.s0_index) return "S0";
    if (i == traj.s1_index) return "S1";
    return "member";
}

inline void run_formation(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const ForceModel fm = force_model_from(cfg);
    const Cluster cl = generate_cluster(cluster_spec_from(cfg), fm);
    const ClusterTrajectory traj =
        simulate_cluster(cl, 1, fm, {}, cfg.samples_per_orbit, opt.n_threads);
    CsvTable table;
    table.header = {"sat_id",    "site_i",    "site_j",   "x0_m",      "y0_m",
                    "z0_m",      "xdot0_mps", "ydot0_mps", "zdot0_mps"};
    for (std::size_t i = 0; i < cl.sites.size(); ++i) {
        const HcwState& r = cl.design_rel[i];
        table.add_row({std::to_string(i), std::to_string(cl.sites[i].i),
                       std::to_string(cl.sites[i].j), format_double(r.x_m), format_double(r.y_m),
                       format_double(r.z_m), format_double(r.xdot_mps), format_double(r.ydot_mps),
                       format_double(r.zdot_mps)});
    }
    emit(rep, opt, "formation.csv", table);

    double closure_m = 0.0;
    const std::size_t last = traj.sample_times_s.size() - 1;
    for (std::size_t i = 0; i < cl.sites.size(); ++i) {
        const HcwState& a = traj.lvlh[0][i];
        const HcwState& b = traj.lvlh[last][i];
        closure_m = std::max(closure_m, std::sqrt(std::pow(b.x_m - a.x_m, 2) +
                                                  std::pow(b.y_m - a.y_m, 2) +
                                                  std::pow(b.z_m - a.z_m, 2)));
    }
    const ShapeReport shape = shape_metrics(traj);
    headline(rep, "n_satellites", static_cast<double>(cl.sites.size()));
    headline(rep, "orbit_period_s", traj.orbit.period_s());
    headline(rep, "pattern_closure_m", closure_m);
    headline(rep, "axis_ratio", shape.samples.front().axis_ratio);
    headline(rep, "shape_cycle_period_s", shape.cycle_period_s);
    headline(rep, "shape_cycles_per_orbit", static_cast<double>(shape.cycles_per_orbit));
}

inline void run_figure2(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const ForceModel fm = force_model_from(cfg);
    const Cluster cl = generate_cluster(cluster_spec_from(cfg), fm);
    const ClusterTrajectory traj =
        simulate_cluster(cl, 1, fm, {}, cfg.samples_per_orbit, opt.n_threads);
    CsvTable table;
    table.header = {"t_frac", "sat_id", "role", "x_m", "y_m"};
    const std::size_t n_t = traj.sample_times_s.size();
    for (std::size_t k = 0; k < n_t; ++k) {
        const double t_frac = static_cast<double>(k) / static_cast<double>(n_t - 1);
        for (std::size_t i = 0; i < traj.n_satellites(); ++i)
            table.add_row({format_double(t_frac), std::to_string(i), role_of(traj, i),
                           format_double(traj.display[k][i].x),
                           format_double(traj.display[k][i].y)});
    }
    emit(rep, opt, "figure2.csv", table);
    headline(rep, "n_time_samples", static_cast<double>(n_t));
    headline(rep, "n_satellites", static_cast<double>(traj.n_satellites()));
}

inline void run_figure3(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const ForceModel fm = force_model_from(cfg);
    const Cluster cl = generate_cluster(cluster_spec_from(cfg), fm);
    const ClusterTrajectory traj =
        simulate_cluster(cl, 1, fm, {}, cfg.samples_per_orbit, opt.n_threads);
    const NeighborReport nbr = neighbor_distances(traj, Neighborhood::kFull8);
    CsvTable table;
    table.header = {"t_s", "neighbor_id", "kind", "distance_m"};
    for (const NeighborSeries& ser : nbr.series)
        for (std::size_t k = 0; k < nbr.t_s.size(); ++k)
            table.add_row({format_double(nbr.t_s[k]), std::to_string(ser.sat_index), ser.kind,
                           format_double(ser.distance_m[k])});
    emit(rep, opt, "figure3.csv", table);

    double direct_min = 1e300, direct_max = 0.0;
    for (const NeighborSeries& ser : nbr.series)
        if (ser.kind == "direct") {
            direct_min = std::min(direct_min, ser.min_m);
            direct_max = std::max(direct_max, ser.max_m);
        }
    headline(rep, "direct_min_m", direct_min);
    headline(rep, "direct_max_m", direct_max);
    if (!nbr.series.empty()) {
        const double period = series_period(nbr.t_s, nbr.series.front().distance_m);
        headline(rep, "distance_period_s", period);
        headline(rep, "cycles_per_orbit", traj.orbit.period_s() / period);
    }
}

inline void run_drift_study(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    ClusterSpec spec = cluster_spec_from(cfg);
    const ForceModel fm = force_model_from(cfg);
    DriftOptions dopt;
    dopt.n_orbits = cfg.n_orbits;
    dopt.n_threads = opt.n_threads;
    if (cfg.optimize) {
        const AxisRatioResult res =
            optimize_axis_ratio(spec, cfg.rho_lo, cfg.rho_hi, cfg.rho_tol, fm, dopt);
        spec.axis_ratio_rho = res.rho_star;
        headline(rep, "rho_star", res.rho_star);
        headline(rep, "flat_objective", res.flat_objective ? 1.0 : 0.0);
    }
    const DriftReport drift = j2_drift_metric(spec, fm, dopt);
    CsvTable table;
    table.header = {"sat_id", "dv_mps_per_year", "max_radius_km", "metric"};
    for (const SatelliteDrift& s : drift.per_satellite)
        table.add_row({std::to_string(s.sat_index), format_double(s.dv_mps_per_year),
                       format_double(s.max_radius_km),
                       format_double(s.dv_mps_per_year / drift.max_radius_km)});
    emit(rep, opt, "drift_report.csv", table);
    headline(rep, "rho", spec.axis_ratio_rho);
    headline(rep, "correction_cadence_s", drift.correction_cadence_s);
    headline(rep, "max_radius_km", drift.max_radius_km);
    headline(rep, "max_dv_mps_per_year", drift.max_dv_mps_per_year);
    headline(rep, "metric_mps_per_year_per_km", drift.metric_mps_per_year_per_km);
}

inline void run_linkbudget(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const OpticalTerminal t = terminal_from(cfg);
    const std::vector<ModulationScheme> schemes = schemes_from(cfg);
    const DwdmRequirement req = dwdm_aggregate(dwdm_preset_from(cfg));
    const LinkBudgetResult lb = link_budget(t, t, cfg.distance_m, schemes, req);
    const MaxDistanceResult maxd = max_dwdm_distance(t, t, req.required_power_w);
    const MultiplexPlan plan = spatial_multiplex_plan(t.aperture_diameter_m, t.wavelength_m,
                                                      cfg.distance_m, req.aggregate_bps);
    CsvTable table;
    table.header = {"quantity", "value", "unit"};
    table.add_row({"distance", format_double(lb.distance_m), "m"});
    table.add_row({"received_power", format_double(lb.received_power_w), "W"});
    table.add_row({"spot_diameter", format_double(lb.spot_diameter_m), "m"});
    table.add_row({"near_field", lb.near_field ? "1" : "0", "bool"});
    for (const auto& [name, rate] : lb.photon_limited_rate_bps)
        table.add_row({"rate_" + name, format_double(rate), "bit/s"});
    table.add_row({"dwdm_aggregate", format_double(req.aggregate_bps), "bit/s"});
    table.add_row({"dwdm_required_power", format_double(req.required_power_w), "W"});
    table.add_row({"dwdm_feasible", lb.dwdm_feasible ? "1" : "0", "bool"});
    table.add_row({"dwdm_margin", format_double(lb.margin_db), "dB"});
    table.add_row({"max_dwdm_distance",
                   maxd.feasibility == DwdmFeasibility::kFeasible ? format_double(maxd.distance_m)
                                                                  : "0",
                   "m"});
    table.add_row({"mux_array_dim", std::to_string(plan.array_dim), "count"});
    table.add_row({"mux_aggregate", format_double(plan.aggregate_bandwidth_bps), "bit/s"});
    emit(rep, opt, "link_budget.csv", table);
    headline(rep, "received_power_w", lb.received_power_w);
    headline(rep, "dwdm_aggregate_bps", req.aggregate_bps);
    headline(rep, "max_dwdm_distance_m", maxd.distance_m);
}

inline void run_figure1(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const OpticalTerminal t = terminal_from(cfg);
    const std::vector<ModulationScheme> schemes = schemes_from(cfg);
    std::vector<double> grid(cfg.n_points);
    const double ratio = cfg.distance_max_m / cfg.distance_min_m;
    for (int k = 0; k < cfg.n_points; ++k)
        grid[k] = cfg.distance_min_m *
                  std::pow(ratio, static_cast<double>(k) / static_cast<double>(cfg.n_points - 1));
    const auto curve = bandwidth_vs_distance_curve(t, t, schemes, grid);
    CsvTable table;
    table.header = {"distance_m", "scheme", "bandwidth_bps", "regime"};
    for (const BandwidthSample& s : curve)
        table.add_row({format_double(s.distance_m), s.scheme, format_double(s.bandwidth_bps),
                       s.regime});
    emit(rep, opt, "figure1.csv", table);
    headline(rep, "n_samples", static_cast<double>(curve.size()));
}

inline void run_radiation(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const OrbitEnvironment env{cfg.dose_rate_rad_per_year, cfg.mission_years};
    const SeeRateReport see =
        see_rate_report(profiles_from(cfg), env, cfg.inferences_per_year);
    CsvTable table;
    table.header = {"mode", "events_per_year", "events_per_mission", "ci_low", "ci_high"};
    double total_per_year = 0.0;
    for (const ModeRate& m : see.modes) {
        table.add_row({m.failure_mode, format_double(m.events_per_year),
                       format_double(m.events_per_mission), format_double(m.ci_low_per_year),
                       format_double(m.ci_high_per_year)});
        total_per_year += m.events_per_year;
    }
    emit(rep, opt, "radiation_report.csv", table);
    headline(rep, "mission_dose_rad", env.mission_dose_rad());
    headline(rep, "total_events_per_year", total_per_year);
}

inline void run_economics(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const LearningCurveModel model{cfg.anchor_price_usd_per_kg, cfg.anchor_cumulative_mass_t,
                                   cfg.learning_rate};
    const double target_mass_t = mass_for_price_t(model, cfg.target_price_usd_per_kg);
    CsvTable table;
    table.header = {"cumulative_mass_t", "price_usd_per_kg"};
    constexpr int kCurvePoints = 61;
    const double m_lo = 0.05, m_hi = 1e6;
    for (int k = 0; k < kCurvePoints; ++k) {
        const double m = m_lo * std::pow(m_hi / m_lo,
                                         static_cast<double>(k) / (kCurvePoints - 1));
        table.add_row({format_double(m), format_double(learning_price_usd_per_kg(model, m))});
    }
    emit(rep, opt, "learning_curve.csv", table);

    const LearningRateFit fit = fit_learning_rate(history_from(cfg));
    StarshipCostModel ship;
    const double cost_1x = starship_cost_per_kg(ship).total_usd_per_kg;
    ship.reuse_count = 10;
    const double cost_10x = starship_cost_per_kg(ship).total_usd_per_kg;
    headline(rep, "target_price_usd_per_kg", cfg.target_price_usd_per_kg);
    headline(rep, "mass_for_target_price_t", target_mass_t);
    headline(rep, "fitted_learning_rate", fit.learning_rate);
    headline(rep, "heavy_lift_usd_per_kg_no_reuse", cost_1x);
    headline(rep, "heavy_lift_usd_per_kg_10x_reuse", cost_10x);
}

inline void run_table1(const ScenarioConfig& cfg, const RunOptions& opt, RunReport& rep) {
    const Table1Report t1 = table1_report(platforms_from(cfg), cfg.price_scenarios_usd_per_kg);
    CsvTable table;
    table.header = {"platform", "mass_kg", "power_kw", "lifespan_y", "price_per_kg",
                    "usd_per_kw_year"};
    for (const Table1Cell& c : t1.cells)
        table.add_row({c.platform, format_double(c.mass_kg), format_double(c.power_kw),
                       format_double(c.lifespan_years), format_double(c.price_usd_per_kg),
                       format_double(c.usd_per_kw_year)});
    emit(rep, opt, "table1.csv", table);
    headline(rep, "min_usd_per_kw_year_at_last_price", t1.min_usd_per_kw_year_at_last_price);
    headline(rep, "max_usd_per_kw_year_at_last_price", t1.max_usd_per_kw_year_at_last_price);
}

}  // namespace detail

/// Validates and executes one scenario; all outputs are written atomically
/// into out_dir and fingerprinted in the returned report.
inline RunReport run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir,
                              const RunOptions& opt = {}) {
    validate_scenario_config(cfg);
    std::filesystem::create_directories(out_dir);
    RunReport rep;
    rep.kind = cfg.kind;
    rep.out_dir = out_dir;
    switch (cfg.kind) {
        case ScenarioKind::kFormation: detail::run_formation(cfg, opt, rep); break;
        case ScenarioKind::kFigure2: detail::run_figure2(cfg, opt, rep); break;
        case ScenarioKind::kFigure3: detail::run_figure3(cfg, opt, rep); break;
        case ScenarioKind::kDriftStudy: detail::run_drift_study(cfg, opt, rep); break;
        case ScenarioKind::kLinkBudget: detail::run_linkbudget(cfg, opt, rep); break;
        case ScenarioKind::kFigure1: detail::run_figure1(cfg, opt, rep); break;
        case ScenarioKind::kRadiation: detail::run_radiation(cfg, opt, rep); break;
        case ScenarioKind::kEconomics: detail::run_economics(cfg, opt, rep); break;
        case ScenarioKind::kTable1: detail::run_table1(cfg, opt, rep); break;
    }
    return rep;
}

}  // namespace satcluster
