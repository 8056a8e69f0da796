#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satcluster/formation/drift.hpp"

namespace satcluster {

struct AxisRatioResult {
    double rho_star = 1.0;
    double drift_at_star = 0.0;  // m/s/year per km
    bool flat_objective = false;
    std::vector<std::pair<double, double>> curve;  // (rho, drift) evaluations
};

/// Deterministic 1-D minimization of the J2 drift metric over the axis-ratio
/// correction: uniform pre-scan to bracket the minimum, then golden-section.
/// A flat objective (J2 off) returns the range midpoint, flagged.
inline AxisRatioResult optimize_axis_ratio(ClusterSpec spec, double rho_lo, double rho_hi,
                                           double rho_tol, const ForceModel& fm,
                                           const DriftOptions& dopt = {}) {
    if (!(rho_lo < rho_hi) || rho_lo < 0.99 || rho_hi > 1.01)
        throw std::invalid_argument("optimize_axis_ratio: range must lie inside [0.99, 1.01]");
    if (!(rho_tol > 0.0)) throw std::invalid_argument("optimize_axis_ratio: rho_tol must be > 0");

    AxisRatioResult res;
    auto eval = [&](double rho) {
        spec.axis_ratio_rho = rho;
        const double d = j2_drift_metric(spec, fm, dopt).metric_mps_per_year_per_km;
        res.curve.push_back({rho, d});
        return d;
    };

    constexpr int kScan = 9;
    std::vector<double> xs(kScan), ys(kScan);
    for (int k = 0; k < kScan; ++k) {
        xs[k] = rho_lo + (rho_hi - rho_lo) * k / (kScan - 1);
        ys[k] = eval(xs[k]);
    }
    const double y_max = *std::max_element(ys.begin(), ys.end());
    const double y_min = *std::min_element(ys.begin(), ys.end());
    // 0.1 m/s/yr/km is the numerical floor of the drift metric itself; a
    // curve whose variation stays below it carries no usable gradient
    if (y_max - y_min <= std::max(0.1, 0.01 * y_max)) {
        res.flat_objective = true;
        res.rho_star = 0.5 * (rho_lo + rho_hi);
        res.drift_at_star = y_min;
        return res;
    }
    int k_best = 0;
    for (int k = 1; k < kScan; ++k)
        if (ys[k] < ys[k_best]) k_best = k;
    // bracket around the scan minimum (clamped at the range edges)
    double a = xs[std::max(0, k_best - 1)];
    double b = xs[std::min(kScan - 1, k_best + 1)];

    constexpr double kGolden = 0.6180339887498949;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (b - a > rho_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = eval(x2);
        }
    }
    res.rho_star = 0.5 * (a + b);
    res.drift_at_star = eval(res.rho_star);
    return res;
}

}  // namespace satcluster
