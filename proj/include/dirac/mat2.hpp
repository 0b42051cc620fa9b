#pragma once

#include <cmath>

#include "dirac/errors.hpp"

namespace dirac {

struct Vec2 {
    double a = 0.0;
    double b = 0.0;

    Vec2() = default;
    Vec2(double a_, double b_) : a(a_), b(b_) {}

    Vec2 operator+(const Vec2& o) const { return {a + o.a, b + o.b}; }
    Vec2 operator-(const Vec2& o) const { return {a - o.a, b - o.b}; }
    Vec2 operator*(double s) const { return {a * s, b * s}; }
    double norm_inf() const { return std::max(std::fabs(a), std::fabs(b)); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    Mat2() = default;
    Mat2(double m11, double m12, double m21, double m22)
        : a11(m11), a12(m12), a21(m21), a22(m22) {}

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }

    Mat2 transpose() const { return {a11, a21, a12, a22}; }

    Mat2 operator+(const Mat2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    Vec2 operator*(const Vec2& v) const {
        return {a11 * v.a + a12 * v.b, a21 * v.a + a22 * v.b};
    }

    double norm_max() const {
        return std::max(std::max(std::fabs(a11), std::fabs(a12)),
                        std::max(std::fabs(a21), std::fabs(a22)));
    }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

inline constexpr double singular_eps = 1e-12;

// gamma = i*sigma2; the single sign convention everything else follows.
inline const Mat2 GAMMA{0.0, 1.0, -1.0, 0.0};
inline const Mat2 SIGMA1{0.0, 1.0, 1.0, 0.0};
inline const Mat2 SIGMA3{1.0, 0.0, 0.0, -1.0};
inline const Mat2 IDENTITY{1.0, 0.0, 0.0, 1.0};

inline Mat2 mat2_inverse(const Mat2& m) {
    const double d = m.det();
    if (std::fabs(d) <= singular_eps) throw SingularMatrix(d);
    return {m.a22 / d, -m.a12 / d, -m.a21 / d, m.a11 / d};
}

} // namespace dirac
