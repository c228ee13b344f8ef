#include "shockprof/linalg.hpp"

#include <algorithm>

namespace shockprof {

std::pair<std::complex<double>, std::complex<double>> monic_quadratic_roots(double t, double d) {
    const double disc = 0.25 * t * t - d;
    if (disc < 0.0) {
        const double re = 0.5 * t;
        const double im = std::sqrt(-disc);
        return {{re, -im}, {re, im}};
    }
    const double root = std::sqrt(disc);
    const double big = 0.5 * t + std::copysign(root, t);
    if (big == 0.0) return {{0.0, 0.0}, {0.0, 0.0}};
    const double small = d / big;
    return {{std::min(big, small), 0.0}, {std::max(big, small), 0.0}};
}

namespace {

bool less_complex(const std::complex<double> &a, const std::complex<double> &b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

std::array<std::complex<double>, 2> eigenvalues(const Mat2 &a) {
    auto [l0, l1] = monic_quadratic_roots(a.trace(), a.det());
    std::array<std::complex<double>, 2> out{l0, l1};
    std::sort(out.begin(), out.end(), less_complex);
    return out;
}

Vec2 eigenvector(const Mat2 &a, double lambda) {
    // Rows of (a - lambda I) are orthogonal to the eigenvector; use the larger row.
    const Vec2 r0{a(0, 0) - lambda, a(0, 1)};
    const Vec2 r1{a(1, 0), a(1, 1) - lambda};
    const Vec2 &r = norm(r0) >= norm(r1) ? r0 : r1;
    Vec2 v{-r.v1, r.v0};
    const double n = norm(v);
    if (n == 0.0) return {1.0, 0.0};
    return (1.0 / n) * v;
}

std::array<double, 2> symmetric_eigenvalues(const Mat2 &a) {
    const Mat2 s = a.sym();
    const double mean = 0.5 * s.trace();
    const double half_diff = 0.5 * (s(0, 0) - s(1, 1));
    const double r = std::hypot(half_diff, s(0, 1));
    return {mean - r, mean + r};
}

std::array<std::complex<double>, 2> generalized_eigenvalues(const Mat2 &a, const Mat2 &b) {
    // det(a - l b) = det(b) l^2 - c l + det(a)
    const double qa = b.det();
    const double qb = -(a(0, 0) * b(1, 1) + a(1, 1) * b(0, 0) - a(0, 1) * b(1, 0) - a(1, 0) * b(0, 1));
    const double qc = a.det();
    auto [l0, l1] = monic_quadratic_roots(-qb / qa, qc / qa);
    std::array<std::complex<double>, 2> out{l0, l1};
    std::sort(out.begin(), out.end(), less_complex);
    return out;
}

bool is_positive_definite(const Mat2 &a, double rel_tol) {
    const auto ev = symmetric_eigenvalues(a);
    return ev[0] > rel_tol * a.norm();
}

}  // namespace shockprof
