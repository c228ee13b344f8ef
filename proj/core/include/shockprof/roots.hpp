#pragma once

#include <cmath>
#include <sstream>

#include "shockprof/errors.hpp"

namespace shockprof {

/// Newton's method kept inside a sign-change bracket [lo, hi], bisecting
/// whenever a Newton step would leave it. `fdf(x)` returns {f(x), f'(x)}.
template <typename Fdf>
double safeguarded_newton(Fdf &&fdf, double lo, double hi, double rel_tol = 1e-15, int max_iter = 300) {
    double f_lo = fdf(lo).first;
    double f_hi = fdf(hi).first;
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "no sign change on bracket [" << lo << ", " << hi << "]: f = " << f_lo << ", " << f_hi;
        throw NumericalError(os.str());
    }
    const bool increasing = f_hi > 0.0;
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < max_iter; ++iter) {
        const auto [f, df] = fdf(x);
        if (f == 0.0) return x;
        if ((f > 0.0) == increasing) {
            hi = x;
        } else {
            lo = x;
        }
        double next = x - f / df;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - x);
        x = next;
        if (step <= rel_tol * std::abs(x) || hi - lo <= rel_tol * std::max(std::abs(hi), std::abs(lo))) return x;
    }
    std::ostringstream os;
    os.precision(17);
    os << "root refinement did not converge; final bracket [" << lo << ", " << hi << "]";
    throw NumericalError(os.str());
}

}  // namespace shockprof
