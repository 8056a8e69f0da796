#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace satcluster {

/// Wright's-law price model: price falls by learning_rate for every doubling
/// of cumulative mass launched.
struct LearningCurveModel {
    double anchor_price_usd_per_kg = 1800.0;
    double anchor_cumulative_mass_t = 400.0;
    double learning_rate = 0.20;

    void validate() const {
        if (!(anchor_price_usd_per_kg > 0.0) || !(anchor_cumulative_mass_t > 0.0))
            throw std::invalid_argument("LearningCurveModel: anchors must be positive");
        if (!(learning_rate > 0.0 && learning_rate < 1.0))
            throw std::invalid_argument("LearningCurveModel: learning_rate in (0, 1)");
    }

    double exponent() const { return std::log2(1.0 - learning_rate); }
};

inline double learning_price_usd_per_kg(const LearningCurveModel& model,
                                        double cumulative_mass_t) {
    model.validate();
    if (!(cumulative_mass_t > 0.0))
        throw std::domain_error("learning_price_usd_per_kg: mass must be positive");
    return model.anchor_price_usd_per_kg *
           std::pow(cumulative_mass_t / model.anchor_cumulative_mass_t, model.exponent());
}

/// Exact inverse of learning_price for targets below the anchor price.
inline double mass_for_price_t(const LearningCurveModel& model, double target_price_usd_per_kg) {
    model.validate();
    if (!(target_price_usd_per_kg > 0.0))
        throw std::domain_error("mass_for_price_t: target price must be positive");
    if (target_price_usd_per_kg >= model.anchor_price_usd_per_kg)
        throw std::domain_error("mass_for_price_t: target at or above the anchor price");
    return model.anchor_cumulative_mass_t *
           std::pow(target_price_usd_per_kg / model.anchor_price_usd_per_kg,
                    1.0 / model.exponent());
}

struct LearningRateFit {
    double learning_rate = 0.0;
    double slope_log2 = 0.0;    // d log2(price) / d log2(mass)
    double rms_residual = 0.0;  // in log2-price units
};

/// Least-squares power-law fit of price vs cumulative mass;
/// LR = 1 - 2^slope.
inline LearningRateFit fit_learning_rate(
    const std::vector<std::pair<double, double>>& history_mass_t_price) {
    if (history_mass_t_price.size() < 2)
        throw std::invalid_argument("fit_learning_rate: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(history_mass_t_price.size());
    for (const auto& [m, p] : history_mass_t_price) {
        if (!(m > 0.0) || !(p > 0.0))
            throw std::invalid_argument("fit_learning_rate: all points must be positive");
        const double x = std::log2(m), y = std::log2(p);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("fit_learning_rate: degenerate history (equal masses)");
    LearningRateFit fit;
    fit.slope_log2 = (n * sxy - sx * sy) / denom;
    fit.learning_rate = 1.0 - std::pow(2.0, fit.slope_log2);
    const double intercept = (sy - fit.slope_log2 * sx) / n;
    double ss = 0.0;
    for (const auto& [m, p] : history_mass_t_price) {
        const double r = std::log2(p) - (intercept + fit.slope_log2 * std::log2(m));
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

/// Illustrative launch-price history (cumulative tonnes, USD/kg): early
/// heavy-lift era through current reusable-booster pricing. Approximate
/// public figures, bundled to exercise the fit; not a primary data product.
inline std::vector<std::pair<double, double>> sample_price_history() {
    return {{0.064, 30000.0}, {0.5, 16100.0}, {5.0, 7160.0},
            {25.0, 4480.0},   {100.0, 2760.0}, {400.0, 1800.0}};
}

}  // namespace satcluster
