#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "satcluster/orbit/detail/dop853_coeffs.hpp"

namespace satcluster {

class IntegrationError : public std::runtime_error {
public:
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

struct Dop853Options {
    double rel_tol = 1e-12;
    double abs_tol = 1e-6;
    double max_step = std::numeric_limits<double>::infinity();
    // When > 0, take uniform steps of this size with error control disabled.
    double fixed_step = 0.0;
    long max_steps = 4000000;
};

struct Dop853Stats {
    long n_steps = 0;
    long n_accepted = 0;
    long n_rejected = 0;
    long n_rhs = 0;
};

template <std::size_t N>
using StateArray = std::array<double, N>;

/// One accepted step with 7th-order interpolation over [t_begin, t_end].
template <std::size_t N>
struct DenseSegment {
    double t_begin = 0.0;
    double t_end = 0.0;
    std::array<StateArray<N>, 8> cont{};

    void eval(double t, StateArray<N>& y) const {
        const double h = t_end - t_begin;
        const double s = (t - t_begin) / h;
        const double s1 = 1.0 - s;
        for (std::size_t i = 0; i < N; ++i) {
            y[i] = cont[0][i] +
                   s * (cont[1][i] +
                        s1 * (cont[2][i] +
                              s * (cont[3][i] +
                                   s1 * (cont[4][i] +
                                         s * (cont[5][i] +
                                              s1 * (cont[6][i] + s * cont[7][i]))))));
        }
    }
};

namespace detail {

template <std::size_t N, class Rhs>
class Dop853Stepper {
public:
    Dop853Stepper(Rhs& rhs, const Dop853Options& opt, Dop853Stats& stats)
        : rhs_(rhs), opt_(opt), stats_(stats) {}

    void init(double t, const StateArray<N>& y) {
        t_ = t;
        y_ = y;
        eval(t_, y_, k1_);
        h_ = opt_.fixed_step > 0.0 ? opt_.fixed_step : initial_step();
    }

    double t() const { return t_; }
    const StateArray<N>& y() const { return y_; }
    double step_size() const { return h_; }

    // Advances by one accepted step, not beyond t_limit. Returns the time
    // reached.
    double advance(double t_limit) {
        using std::abs;
        bool rejected = false;
        for (;;) {
            const double t_eps =
                16.0 * std::numeric_limits<double>::epsilon() * std::max(abs(t_), 1.0);
            if (t_limit - t_ <= t_eps) {  // rounding residue, not a real step
                t_ = t_limit;
                return t_;
            }
            if (++stats_.n_steps > opt_.max_steps)
                throw IntegrationError("dop853: step limit exceeded at t=" + std::to_string(t_));
            double h = std::min({h_, opt_.max_step, t_limit - t_});
            const bool clipped = h < h_;
            if (!clipped && h <= t_eps)
                throw IntegrationError("dop853: step size underflow at t=" + std::to_string(t_) +
                                       " (h=" + std::to_string(h) + "); tolerances unattainable");
            stages(h);
            if (opt_.fixed_step > 0.0) {
                accept(h);
                return t_;
            }
            const double err = error_norm(h);
            if (err <= 1.0) {
                double scale = err == 0.0 ? kMaxScale
                                          : kSafety * std::pow(err, -0.125);
                scale = std::clamp(scale, kMinScale, kMaxScale);
                if (rejected) scale = std::min(scale, 1.0);
                accept(h);
                if (!clipped) h_ = h * scale;
                stats_.n_accepted++;
                return t_;
            }
            rejected = true;
            stats_.n_rejected++;
            h_ = h * std::max(kMinScale, kSafety * std::pow(err, -0.125));
        }
    }

    void make_dense(DenseSegment<N>& seg) {
        using namespace detail::dop853;
        const double h = h_last_;
        const double t0 = t_ - h;
        seg.t_begin = t0;
        seg.t_end = t_;
        for (std::size_t i = 0; i < N; ++i) {
            const double ydiff = y_[i] - yold_[i];
            const double bspl = h * k1old_[i] - ydiff;
            seg.cont[0][i] = yold_[i];
            seg.cont[1][i] = ydiff;
            seg.cont[2][i] = bspl;
            seg.cont[3][i] = ydiff - h * k1_[i] - bspl;
            seg.cont[4][i] = d41 * k1old_[i] + d46 * k6_[i] + d47 * k7_[i] + d48 * k8_[i] +
                             d49 * k9_[i] + d410 * k10_[i] + d411 * k11_[i] + d412 * k12_[i] +
                             d413 * k1_[i];
            seg.cont[5][i] = d51 * k1old_[i] + d56 * k6_[i] + d57 * k7_[i] + d58 * k8_[i] +
                             d59 * k9_[i] + d510 * k10_[i] + d511 * k11_[i] + d512 * k12_[i] +
                             d513 * k1_[i];
            seg.cont[6][i] = d61 * k1old_[i] + d66 * k6_[i] + d67 * k7_[i] + d68 * k8_[i] +
                             d69 * k9_[i] + d610 * k10_[i] + d611 * k11_[i] + d612 * k12_[i] +
                             d613 * k1_[i];
            seg.cont[7][i] = d71 * k1old_[i] + d76 * k6_[i] + d77 * k7_[i] + d78 * k8_[i] +
                             d79 * k9_[i] + d710 * k10_[i] + d711 * k11_[i] + d712 * k12_[i] +
                             d713 * k1_[i];
        }
        // three extra stages
        StateArray<N> yw, k14, k15, k16;
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = yold_[i] + h * (a141 * k1old_[i] + a147 * k7_[i] + a148 * k8_[i] +
                                    a149 * k9_[i] + a1410 * k10_[i] + a1411 * k11_[i] +
                                    a1412 * k12_[i] + a1413 * k1_[i]);
        eval(t0 + c14 * h, yw, k14);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = yold_[i] + h * (a151 * k1old_[i] + a156 * k6_[i] + a157 * k7_[i] +
                                    a158 * k8_[i] + a1511 * k11_[i] + a1512 * k12_[i] +
                                    a1513 * k1_[i] + a1514 * k14[i]);
        eval(t0 + c15 * h, yw, k15);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = yold_[i] + h * (a161 * k1old_[i] + a166 * k6_[i] + a167 * k7_[i] +
                                    a168 * k8_[i] + a169 * k9_[i] + a1613 * k1_[i] +
                                    a1614 * k14[i] + a1615 * k15[i]);
        eval(t0 + c16 * h, yw, k16);
        for (std::size_t i = 0; i < N; ++i) {
            using namespace detail::dop853;
            seg.cont[4][i] = h * (seg.cont[4][i] + d414 * k14[i] + d415 * k15[i] + d416 * k16[i]);
            seg.cont[5][i] = h * (seg.cont[5][i] + d514 * k14[i] + d515 * k15[i] + d516 * k16[i]);
            seg.cont[6][i] = h * (seg.cont[6][i] + d614 * k14[i] + d615 * k15[i] + d616 * k16[i]);
            seg.cont[7][i] = h * (seg.cont[7][i] + d714 * k14[i] + d715 * k15[i] + d716 * k16[i]);
        }
    }

private:
    static constexpr double kSafety = 0.9;
    static constexpr double kMinScale = 1.0 / 3.0;
    static constexpr double kMaxScale = 6.0;

    void eval(double t, const StateArray<N>& y, StateArray<N>& dydt) {
        rhs_(t, y, dydt);
        stats_.n_rhs++;
    }

    // Hairer-style starting step estimate based on y' and a trial Euler step.
    double initial_step() {
        double dnf = 0.0, dny = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk = opt_.abs_tol + opt_.rel_tol * std::abs(y_[i]);
            dnf += (k1_[i] / sk) * (k1_[i] / sk);
            dny += (y_[i] / sk) * (y_[i] / sk);
        }
        double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
        h = std::min(h, opt_.max_step);
        StateArray<N> y1, k2;
        for (std::size_t i = 0; i < N; ++i) y1[i] = y_[i] + h * k1_[i];
        eval(t_ + h, y1, k2);
        double der2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk = opt_.abs_tol + opt_.rel_tol * std::abs(y_[i]);
            der2 += ((k2[i] - k1_[i]) / sk) * ((k2[i] - k1_[i]) / sk);
        }
        der2 = std::sqrt(der2) / h;
        const double der12 = std::max(der2, std::sqrt(dnf));
        const double h1 = der12 <= 1e-15 ? std::max(1e-6, h * 1e-3)
                                         : std::pow(0.01 / der12, 1.0 / 8.0);
        return std::min({100.0 * h, h1, opt_.max_step});
    }

    void stages(double h) {
        using namespace detail::dop853;
        const double t = t_;
        const StateArray<N>& y = y_;
        StateArray<N> yw;
        auto stage = [&](double c, StateArray<N>& k) { eval(t + c * h, yw, k); };

        for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + h * (a21 * k1_[i]);
        stage(c2, k2_);
        for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + h * (a31 * k1_[i] + a32 * k2_[i]);
        stage(c3, k3_);
        for (std::size_t i = 0; i < N; ++i) yw[i] = y[i] + h * (a41 * k1_[i] + a43 * k3_[i]);
        stage(c4, k4_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a51 * k1_[i] + a53 * k3_[i] + a54 * k4_[i]);
        stage(c5, k5_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a61 * k1_[i] + a64 * k4_[i] + a65 * k5_[i]);
        stage(c6, k6_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a71 * k1_[i] + a74 * k4_[i] + a75 * k5_[i] + a76 * k6_[i]);
        stage(c7, k7_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a81 * k1_[i] + a84 * k4_[i] + a85 * k5_[i] + a86 * k6_[i] +
                                a87 * k7_[i]);
        stage(c8, k8_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a91 * k1_[i] + a94 * k4_[i] + a95 * k5_[i] + a96 * k6_[i] +
                                a97 * k7_[i] + a98 * k8_[i]);
        stage(c9, k9_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a101 * k1_[i] + a104 * k4_[i] + a105 * k5_[i] + a106 * k6_[i] +
                                a107 * k7_[i] + a108 * k8_[i] + a109 * k9_[i]);
        stage(c10, k10_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a111 * k1_[i] + a114 * k4_[i] + a115 * k5_[i] + a116 * k6_[i] +
                                a117 * k7_[i] + a118 * k8_[i] + a119 * k9_[i] + a1110 * k10_[i]);
        stage(c11, k11_);
        for (std::size_t i = 0; i < N; ++i)
            yw[i] = y[i] + h * (a121 * k1_[i] + a124 * k4_[i] + a125 * k5_[i] + a126 * k6_[i] +
                                a127 * k7_[i] + a128 * k8_[i] + a129 * k9_[i] + a1210 * k10_[i] +
                                a1211 * k11_[i]);
        eval(t + h, yw, k12_);
        for (std::size_t i = 0; i < N; ++i) {
            ksum_[i] = b1 * k1_[i] + b6 * k6_[i] + b7 * k7_[i] + b8 * k8_[i] + b9 * k9_[i] +
                       b10 * k10_[i] + b11 * k11_[i] + b12 * k12_[i];
            ynew_[i] = y[i] + h * ksum_[i];
        }
    }

    double error_norm(double h) const {
        using namespace detail::dop853;
        double err3 = 0.0, err5 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk =
                opt_.abs_tol + opt_.rel_tol * std::max(std::abs(y_[i]), std::abs(ynew_[i]));
            const double e3 = ksum_[i] - bhh1 * k1_[i] - bhh2 * k9_[i] - bhh3 * k12_[i];
            const double e5 = er1 * k1_[i] + er6 * k6_[i] + er7 * k7_[i] + er8 * k8_[i] +
                              er9 * k9_[i] + er10 * k10_[i] + er11 * k11_[i] + er12 * k12_[i];
            err3 += (e3 / sk) * (e3 / sk);
            err5 += (e5 / sk) * (e5 / sk);
        }
        double deno = err5 + 0.01 * err3;
        if (deno <= 0.0) deno = 1.0;
        return std::abs(h) * err5 * std::sqrt(1.0 / (static_cast<double>(N) * deno));
    }

    void accept(double h) {
        yold_ = y_;
        k1old_ = k1_;
        y_ = ynew_;
        t_ += h;
        h_last_ = h;
        eval(t_, y_, k1_);  // derivative at the new point; also feeds dense output
    }

    Rhs& rhs_;
    const Dop853Options& opt_;
    Dop853Stats& stats_;
    double t_ = 0.0;
    double h_ = 0.0;
    double h_last_ = 0.0;
    StateArray<N> y_{}, ynew_{}, yold_{}, ksum_{};
    StateArray<N> k1_{}, k1old_{}, k2_{}, k3_{}, k4_{}, k5_{}, k6_{}, k7_{}, k8_{}, k9_{},
        k10_{}, k11_{}, k12_{};
};

}  // namespace detail

/// Integrates y' = rhs(t, y) from t0 to t_end (t_end >= t0).
template <std::size_t N, class Rhs>
StateArray<N> dop853_integrate(Rhs&& rhs, double t0, const StateArray<N>& y0, double t_end,
                               const Dop853Options& opt, Dop853Stats* stats = nullptr) {
    if (t_end < t0) throw std::invalid_argument("dop853_integrate: t_end < t0");
    if (t_end == t0) return y0;
    Dop853Stats local;
    Dop853Stats& st = stats ? *stats : local;
    detail::Dop853Stepper<N, Rhs> stepper(rhs, opt, st);
    stepper.init(t0, y0);
    while (stepper.t() < t_end) stepper.advance(t_end);
    return stepper.y();
}

/// Integrates and reports the state at each requested time (ascending, all
/// >= t0). With `dense` the sample values come from the 7th-order
/// interpolant; otherwise steps are shortened to land on each sample time.
template <std::size_t N, class Rhs, class Sink>
StateArray<N> dop853_integrate_sampled(Rhs&& rhs, double t0, const StateArray<N>& y0,
                                       std::span<const double> times, const Dop853Options& opt,
                                       bool dense, Sink&& sink, Dop853Stats* stats = nullptr) {
    Dop853Stats local;
    Dop853Stats& st = stats ? *stats : local;
    std::size_t next = 0;
    while (next < times.size() && times[next] <= t0) {
        if (times[next] < t0)
            throw std::invalid_argument("dop853_integrate_sampled: sample before t0");
        sink(next, t0, y0);
        ++next;
    }
    if (next == times.size()) return y0;
    const double t_end = times.back();

    detail::Dop853Stepper<N, Rhs> stepper(rhs, opt, st);
    stepper.init(t0, y0);
    if (dense) {
        DenseSegment<N> seg;
        while (stepper.t() < t_end) {
            const double t_prev = stepper.t();
            const double t_now = stepper.advance(t_end);
            if (next < times.size() && times[next] <= t_now) {
                stepper.make_dense(seg);
                StateArray<N> ys;
                while (next < times.size() && times[next] <= t_now) {
                    seg.eval(times[next], ys);
                    sink(next, times[next], ys);
                    ++next;
                }
            }
            (void)t_prev;
        }
    } else {
        while (next < times.size()) {
            while (stepper.t() < times[next]) stepper.advance(times[next]);
            sink(next, stepper.t(), stepper.y());
            ++next;
        }
    }
    return stepper.y();
}

}  // namespace satcluster
