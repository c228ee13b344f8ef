#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace shockprof {

// Fixed-size 2-vectors and 2x2 matrices for the t-x block. Everything the
// profile machinery needs is small enough to do in closed form.

struct Vec2 {
    double v0 = 0.0;
    double v1 = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? v0 : v1; }
    constexpr double &operator[](int i) { return i == 0 ? v0 : v1; }

    constexpr Vec2 &operator+=(const Vec2 &o) {
        v0 += o.v0;
        v1 += o.v1;
        return *this;
    }
    constexpr Vec2 &operator-=(const Vec2 &o) {
        v0 -= o.v0;
        v1 -= o.v1;
        return *this;
    }
    constexpr Vec2 &operator*=(double s) {
        v0 *= s;
        v1 *= s;
        return *this;
    }
};

constexpr Vec2 operator+(Vec2 a, const Vec2 &b) { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2 &b) { return a -= b; }
constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
constexpr Vec2 operator-(const Vec2 &a) { return {-a.v0, -a.v1}; }

constexpr double dot(const Vec2 &a, const Vec2 &b) { return a.v0 * b.v0 + a.v1 * b.v1; }
inline double norm(const Vec2 &a) { return std::hypot(a.v0, a.v1); }

/// Row-major 2x2 matrix, a(r, c).
struct Mat2 {
    std::array<double, 4> m{0.0, 0.0, 0.0, 0.0};

    constexpr Mat2() = default;
    constexpr Mat2(double a00, double a01, double a10, double a11) : m{a00, a01, a10, a11} {}

    static constexpr Mat2 diag(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }
    static constexpr Mat2 outer(const Vec2 &a, const Vec2 &b) {
        return {a.v0 * b.v0, a.v0 * b.v1, a.v1 * b.v0, a.v1 * b.v1};
    }

    constexpr double operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
    constexpr double &operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }

    constexpr double trace() const { return m[0] + m[3]; }
    constexpr double det() const { return m[0] * m[3] - m[1] * m[2]; }
    constexpr Mat2 transpose() const { return {m[0], m[2], m[1], m[3]}; }
    constexpr Mat2 sym() const { return {m[0], 0.5 * (m[1] + m[2]), 0.5 * (m[1] + m[2]), m[3]}; }

    /// Frobenius norm.
    double norm() const { return std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3]); }

    constexpr Mat2 &operator+=(const Mat2 &o) {
        for (std::size_t i = 0; i < 4; ++i) m[i] += o.m[i];
        return *this;
    }
    constexpr Mat2 &operator-=(const Mat2 &o) {
        for (std::size_t i = 0; i < 4; ++i) m[i] -= o.m[i];
        return *this;
    }
    constexpr Mat2 &operator*=(double s) {
        for (auto &x : m) x *= s;
        return *this;
    }
};

constexpr Mat2 operator+(Mat2 a, const Mat2 &b) { return a += b; }
constexpr Mat2 operator-(Mat2 a, const Mat2 &b) { return a -= b; }
constexpr Mat2 operator*(double s, Mat2 a) { return a *= s; }
constexpr Mat2 operator*(Mat2 a, double s) { return a *= s; }

constexpr Vec2 operator*(const Mat2 &a, const Vec2 &x) {
    return {a(0, 0) * x.v0 + a(0, 1) * x.v1, a(1, 0) * x.v0 + a(1, 1) * x.v1};
}

constexpr Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

/// Inverse; caller is responsible for checking the determinant.
constexpr Mat2 inverse(const Mat2 &a) {
    const double d = a.det();
    return {a(1, 1) / d, -a(0, 1) / d, -a(1, 0) / d, a(0, 0) / d};
}

/// Solves a x = b by Cramer's rule.
constexpr Vec2 solve(const Mat2 &a, const Vec2 &b) {
    const double d = a.det();
    return {(b.v0 * a(1, 1) - a(0, 1) * b.v1) / d, (a(0, 0) * b.v1 - a(1, 0) * b.v0) / d};
}

/// Roots of x^2 - t x + d = 0 using the cancellation-free form.
std::pair<std::complex<double>, std::complex<double>> monic_quadratic_roots(double t, double d);

/// Eigenvalues sorted by real part (then imaginary part).
std::array<std::complex<double>, 2> eigenvalues(const Mat2 &a);

/// Unit eigenvector for a real eigenvalue.
Vec2 eigenvector(const Mat2 &a, double lambda);

/// Eigenvalues of the symmetric part, ascending.
std::array<double, 2> symmetric_eigenvalues(const Mat2 &a);

/// Generalized eigenvalues lambda with det(a - lambda b) = 0. For symmetric a
/// and positive definite b they are real; returned ascending by real part.
std::array<std::complex<double>, 2> generalized_eigenvalues(const Mat2 &a, const Mat2 &b);

bool is_positive_definite(const Mat2 &a, double rel_tol = 0.0);

}  // namespace shockprof
