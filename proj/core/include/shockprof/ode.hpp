#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace shockprof {

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_step = 1e-6;
    double max_step = 0.0;  ///< 0 means unbounded
    long max_steps = 2'000'000;
    /// Number of leading components under error control; 0 means all. Trailing
    /// components are carried along as quadratures.
    std::size_t controlled = 0;
};

/// One accepted Dormand-Prince step with its continuous extension.
template <std::size_t N>
struct DenseStep {
    using State = std::array<double, N>;

    double t0 = 0.0;
    double h = 0.0;
    State y0{};
    State y1{};
    std::array<State, 5> coeffs{};

    /// Interpolated state at t0 + frac h, frac in [0, 1].
    State state(double frac) const {
        State out{};
        const double s1 = 1.0 - frac;
        for (std::size_t i = 0; i < N; ++i) {
            out[i] = coeffs[0][i] +
                     frac * (coeffs[1][i] + s1 * (coeffs[2][i] + frac * (coeffs[3][i] + s1 * coeffs[4][i])));
        }
        return out;
    }

    /// Interpolated derivative d/dt at t0 + frac h.
    State derivative(double frac) const {
        State out{};
        const double s1 = 1.0 - frac;
        for (std::size_t i = 0; i < N; ++i) {
            const double c = coeffs[3][i] + s1 * coeffs[4][i];
            const double dc = -coeffs[4][i];
            const double b = coeffs[2][i] + frac * c;
            const double db = c + frac * dc;
            const double a = coeffs[1][i] + s1 * b;
            const double da = -b + s1 * db;
            out[i] = (a + frac * da) / h;
        }
        return out;
    }
};

enum class OdeStatus { finished, stopped, step_underflow, too_many_steps, rhs_failed };

/// Adaptive Dormand-Prince 5(4) integration of y' = f(t, y) from t0 towards
/// t_end (either direction). `rhs(t, y, dy)` returns false to signal that the
/// field cannot be evaluated at y; the step is then retried smaller, and a
/// persistent failure ends the run with rhs_failed. `observer(step)` is called
/// after every accepted step and returns false to stop.
template <std::size_t N, typename Rhs, typename Observer>
OdeStatus integrate_dopri5(Rhs &&rhs, double t0, const std::array<double, N> &y0, double t_end,
                           const OdeOptions &opts, Observer &&observer) {
    using State = std::array<double, N>;
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                     a76 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;
    constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                     d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                     d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

    const double dir = t_end >= t0 ? 1.0 : -1.0;
    double t = t0;
    State y = y0;
    State k1{}, k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, tmp{}, y_new{};
    if (!rhs(t, y, k1)) return OdeStatus::rhs_failed;

    double h = dir * std::abs(opts.initial_step);
    double err_prev = 1e-4;
    int rhs_failures = 0;

    auto stage = [&](auto &&combine, State &k, double tc) -> bool {
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * combine(i);
        return rhs(tc, tmp, k);
    };

    for (long step = 0; step < opts.max_steps; ++step) {
        if (dir * (t - t_end) >= 0.0) return OdeStatus::finished;
        if (opts.max_step > 0.0 && std::abs(h) > opts.max_step) h = dir * opts.max_step;
        if (dir * (t + h - t_end) > 0.0) h = t_end - t;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) return OdeStatus::step_underflow;

        bool ok = stage([&](std::size_t i) { return a21 * k1[i]; }, k2, t + c2 * h) &&
                  stage([&](std::size_t i) { return a31 * k1[i] + a32 * k2[i]; }, k3, t + c3 * h) &&
                  stage([&](std::size_t i) { return a41 * k1[i] + a42 * k2[i] + a43 * k3[i]; }, k4, t + c4 * h) &&
                  stage([&](std::size_t i) { return a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]; }, k5,
                        t + c5 * h) &&
                  stage([&](std::size_t i) {
                      return a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i];
                  }, k6, t + h);
        if (ok) {
            for (std::size_t i = 0; i < N; ++i) {
                y_new[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
            }
            ok = rhs(t + h, y_new, k7);
        }
        if (!ok) {
            if (++rhs_failures > 60) return OdeStatus::rhs_failed;
            h *= 0.25;
            continue;
        }

        double err = 0.0;
        const std::size_t nc = opts.controlled == 0 ? N : std::min(opts.controlled, N);
        for (std::size_t i = 0; i < nc; ++i) {
            const double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            const double e =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]) / sc;
            err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(nc));

        if (err <= 1.0) {
            rhs_failures = 0;
            DenseStep<N> ds;
            ds.t0 = t;
            ds.h = h;
            ds.y0 = y;
            ds.y1 = y_new;
            for (std::size_t i = 0; i < N; ++i) {
                const double ydiff = y_new[i] - y[i];
                const double bspl = h * k1[i] - ydiff;
                ds.coeffs[0][i] = y[i];
                ds.coeffs[1][i] = ydiff;
                ds.coeffs[2][i] = bspl;
                ds.coeffs[3][i] = ydiff - h * k7[i] - bspl;
                ds.coeffs[4][i] =
                    h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
            }
            t += h;
            y = y_new;
            k1 = k7;
            if (!observer(static_cast<const DenseStep<N> &>(ds))) return OdeStatus::stopped;
            // PI step-size controller.
            const double fac = err == 0.0 ? 5.0
                                          : std::clamp(0.9 * std::pow(err, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0),
                                                       0.2, 5.0);
            err_prev = std::max(err, 1e-4);
            h *= fac;
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        }
    }
    return OdeStatus::too_many_steps;
}

}  // namespace shockprof
