#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/formation/trajectory.hpp"

namespace satcluster {

enum class Neighborhood { kDirect4, kFull8 };

struct NeighborSeries {
    std::size_t sat_index = 0;
    LatticeSite site;
    std::string kind;  // "direct" or "diagonal"
    std::vector<double> distance_m;
    double min_m = 0.0;
    double max_m = 0.0;
};

struct NeighborReport {
    std::vector<double> t_s;
    std::vector<NeighborSeries> series;
};

/// Distance time series between S0 and its lattice neighbors.
inline NeighborReport neighbor_distances(const ClusterTrajectory& traj,
                                         Neighborhood neighborhood) {
    std::map<std::pair<int, int>, std::size_t> by_site;
    for (std::size_t i = 0; i < traj.sites.size(); ++i)
        by_site[{traj.sites[i].i, traj.sites[i].j}] = i;

    const LatticeSite s0 = traj.sites[traj.s0_index];
    std::vector<std::pair<LatticeSite, std::string>> offsets = {
        {{1, 0}, "direct"}, {{-1, 0}, "direct"}, {{0, 1}, "direct"}, {{0, -1}, "direct"}};
    if (neighborhood == Neighborhood::kFull8)
        for (int di : {-1, 1})
            for (int dj : {-1, 1}) offsets.push_back({{di, dj}, "diagonal"});

    NeighborReport rep;
    rep.t_s = traj.sample_times_s;
    for (const auto& [off, kind] : offsets) {
        const auto it = by_site.find({s0.i + off.i, s0.j + off.j});
        if (it == by_site.end()) continue;  // degenerate lattice
        NeighborSeries ser;
        ser.sat_index = it->second;
        ser.site = traj.sites[it->second];
        ser.kind = kind;
        ser.distance_m.reserve(traj.sample_times_s.size());
        for (std::size_t k = 0; k < traj.sample_times_s.size(); ++k) {
            const HcwState& a = traj.lvlh[k][traj.s0_index];
            const HcwState& b = traj.lvlh[k][it->second];
            ser.distance_m.push_back(std::sqrt(std::pow(b.x_m - a.x_m, 2) +
                                               std::pow(b.y_m - a.y_m, 2) +
                                               std::pow(b.z_m - a.z_m, 2)));
        }
        ser.min_m = *std::min_element(ser.distance_m.begin(), ser.distance_m.end());
        ser.max_m = *std::max_element(ser.distance_m.begin(), ser.distance_m.end());
        rep.series.push_back(std::move(ser));
    }
    return rep;
}

struct ShapeSample {
    double t_s = 0.0;
    double semi_major_m = 0.0;   // along-track semi-axis of the fitted ellipse
    double semi_minor_m = 0.0;   // radial semi-axis
    double orientation_rad = 0.0;
    double axis_ratio = 0.0;     // semi_major / semi_minor
};

struct ShapeReport {
    std::vector<ShapeSample> samples;
    double cycle_period_s = 0.0;
    int cycles_per_orbit = 0;
};

/// Dominant period of a scalar series via autocorrelation: first local
/// maximum after the first zero crossing, refined by parabolic interpolation.
inline double series_period(const std::vector<double>& t_s, const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n < 8 || t_s.size() != n) throw std::invalid_argument("series_period: series too short");
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(n);
    const std::size_t max_lag = n / 2;
    std::vector<double> ac(max_lag + 1, 0.0);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        double s = 0.0;
        for (std::size_t k = 0; k + lag < n; ++k) s += (v[k] - mean) * (v[k + lag] - mean);
        ac[lag] = s / static_cast<double>(n - lag);
    }
    std::size_t lag0 = 1;
    while (lag0 <= max_lag && ac[lag0] > 0.0) ++lag0;
    if (lag0 >= max_lag) throw std::domain_error("series_period: no oscillation found");
    std::size_t best = lag0;
    for (std::size_t lag = lag0; lag + 1 <= max_lag; ++lag) {
        if (ac[lag] > ac[best]) best = lag;
        // stop at the first prominent peak: a local max above 20% of variance
        if (lag > lag0 && ac[lag] > 0.2 * ac[0] && ac[lag] >= ac[lag - 1] && ac[lag] >= ac[lag + 1]) {
            best = lag;
            break;
        }
    }
    double refined = static_cast<double>(best);
    if (best > 0 && best < max_lag) {
        const double ym = ac[best - 1], y0 = ac[best], yp = ac[best + 1];
        const double denom = ym - 2.0 * y0 + yp;
        if (denom < 0.0) refined += 0.5 * (ym - yp) / denom;
    }
    const double dt = (t_s.back() - t_s.front()) / static_cast<double>(n - 1);
    return refined * dt;
}

/// Per-sample bounding-ellipse fit (covariance-based) of the in-plane cluster
/// shape, plus the recurrence period of the satellite pattern as a point set.
inline ShapeReport shape_metrics(const ClusterTrajectory& traj) {
    const std::size_t n_sat = traj.n_satellites();
    if (n_sat < 3) throw std::invalid_argument("shape_metrics: need >= 3 satellites");
    ShapeReport rep;
    const std::size_t n_t = traj.sample_times_s.size();
    rep.samples.reserve(n_t);
    for (std::size_t k = 0; k < n_t; ++k) {
        double sxx = 0.0, syy = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < n_sat; ++i) {
            const HcwState& s = traj.lvlh[k][i];
            sxx += s.x_m * s.x_m;
            syy += s.y_m * s.y_m;
            sxy += s.x_m * s.y_m;
        }
        sxx /= static_cast<double>(n_sat);
        syy /= static_cast<double>(n_sat);
        sxy /= static_cast<double>(n_sat);
        const double tr = sxx + syy;
        const double disc = std::sqrt(std::pow(sxx - syy, 2) / 4.0 + sxy * sxy);
        const double l_max = tr / 2.0 + disc;
        const double l_min = std::max(tr / 2.0 - disc, 0.0);
        ShapeSample sample;
        sample.t_s = traj.sample_times_s[k];
        sample.semi_major_m = 2.0 * std::sqrt(l_max);
        sample.semi_minor_m = 2.0 * std::sqrt(l_min);
        sample.orientation_rad = 0.5 * std::atan2(2.0 * sxy, syy - sxx);
        sample.axis_ratio = l_min > 0.0 ? std::sqrt(l_max / l_min) : 0.0;
        rep.samples.push_back(sample);
    }

    // Pattern recurrence: the lag at which every satellite's distance from
    // the cluster center matches its own initial value again. Using the
    // per-satellite signature (not the point set, which the 4-fold symmetric
    // lattice reproduces more often) recovers the two shape-cycles per orbit.
    double scale = 0.0;
    std::vector<double> d0(n_sat, 0.0);
    for (std::size_t i = 0; i < n_sat; ++i) {
        d0[i] = std::hypot(traj.lvlh[0][i].x_m, traj.lvlh[0][i].y_m);
        scale = std::max(scale, d0[i]);
    }
    std::vector<double> mismatch(n_t, 0.0);
    for (std::size_t k = 0; k < n_t; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n_sat; ++i) {
            const double d = std::hypot(traj.lvlh[k][i].x_m, traj.lvlh[k][i].y_m) - d0[i];
            acc += d * d;
        }
        mismatch[k] = std::sqrt(acc / static_cast<double>(n_sat));
    }
    std::size_t best_k = 0;
    for (std::size_t k = 2; k + 1 < n_t; ++k) {
        if (mismatch[k] < 0.05 * scale && mismatch[k] <= mismatch[k - 1] &&
            mismatch[k] <= mismatch[k + 1]) {
            best_k = k;
            break;
        }
    }
    if (best_k > 0) {
        double refined = static_cast<double>(best_k);
        const double ym = mismatch[best_k - 1], y0 = mismatch[best_k], yp = mismatch[best_k + 1];
        const double denom = ym - 2.0 * y0 + yp;
        if (denom > 0.0) refined += 0.5 * (ym - yp) / denom;
        const double dt = (traj.sample_times_s.back() - traj.sample_times_s.front()) /
                          static_cast<double>(n_t - 1);
        rep.cycle_period_s = refined * dt;
        const double period = traj.orbit.period_s();
        rep.cycles_per_orbit = static_cast<int>(std::lround(period / rep.cycle_period_s));
    }
    return rep;
}

}  // namespace satcluster
