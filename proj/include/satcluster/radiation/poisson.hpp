#pragma once

#include <cmath>
#include <stdexcept>

namespace satcluster {
namespace detail {

/// Regularized lower incomplete gamma P(a, x), series + continued fraction.
inline double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: invalid arguments");
    if (x == 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {  // series
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace detail

/// Quantile of the chi-square distribution with dof degrees of freedom,
/// bisection on the regularized incomplete gamma CDF.
inline double chi_square_quantile(double p, double dof) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chi_square_quantile: p in (0, 1)");
    if (!(dof > 0.0)) throw std::domain_error("chi_square_quantile: dof must be positive");
    double lo = 0.0, hi = dof + 10.0;
    while (detail::gamma_p(dof / 2.0, hi / 2.0) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (detail::gamma_p(dof / 2.0, mid / 2.0) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct PoissonInterval {
    double lower = 0.0;
    double upper = 0.0;
};

/// Two-sided confidence interval for a Poisson mean given an observed count
/// (standard chi-square bounds; 90% by default).
inline PoissonInterval poisson_mean_interval(int n_observed, double confidence = 0.9) {
    if (n_observed < 0) throw std::domain_error("poisson_mean_interval: negative count");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::domain_error("poisson_mean_interval: confidence in (0, 1)");
    const double alpha = 1.0 - confidence;
    PoissonInterval ci;
    ci.lower = n_observed == 0 ? 0.0 : chi_square_quantile(alpha / 2.0, 2.0 * n_observed) / 2.0;
    ci.upper = chi_square_quantile(1.0 - alpha / 2.0, 2.0 * (n_observed + 1)) / 2.0;
    return ci;
}

}  // namespace satcluster
