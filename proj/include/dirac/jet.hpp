#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dirac/errors.hpp"

namespace dirac {

// Truncated derivative array: d[k] = f^(k)(x) for a fixed point x.
// Products follow the Leibniz rule, so every operation propagates exact
// derivatives; this is what keeps chained transformations free of numerical
// differentiation.
class Jet {
public:
    Jet() = default;
    explicit Jet(int order) : d_(static_cast<std::size_t>(order) + 1, 0.0) {}

    static Jet constant(double c, int order) {
        Jet j(order);
        j.d_[0] = c;
        return j;
    }
    // f(t) = t evaluated at x.
    static Jet variable(double x, int order) {
        Jet j(order);
        j.d_[0] = x;
        if (order >= 1) j.d_[1] = 1.0;
        return j;
    }

    int order() const { return static_cast<int>(d_.size()) - 1; }
    double value() const { return d_[0]; }
    double operator[](std::size_t k) const { return d_[k]; }
    double& operator[](std::size_t k) { return d_[k]; }

    Jet operator+(const Jet& o) const {
        Jet r(std::min(order(), o.order()));
        for (int k = 0; k <= r.order(); ++k) r.d_[k] = d_[k] + o.d_[k];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r(std::min(order(), o.order()));
        for (int k = 0; k <= r.order(); ++k) r.d_[k] = d_[k] - o.d_[k];
        return r;
    }
    Jet operator-() const {
        Jet r = *this;
        for (auto& v : r.d_) v = -v;
        return r;
    }
    Jet operator*(double s) const {
        Jet r = *this;
        for (auto& v : r.d_) v *= s;
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r(std::min(order(), o.order()));
        for (int k = 0; k <= r.order(); ++k) {
            double s = 0.0;
            for (int j = 0; j <= k; ++j) s += binom(k, j) * d_[j] * o.d_[k - j];
            r.d_[k] = s;
        }
        return r;
    }

    // Reciprocal from (f*g)^(k) = 0 for k >= 1; needs f(x) != 0.
    Jet reciprocal() const {
        if (d_[0] == 0.0) throw SingularMatrix(0.0);
        Jet g(order());
        g.d_[0] = 1.0 / d_[0];
        for (int k = 1; k <= order(); ++k) {
            double s = 0.0;
            for (int j = 1; j <= k; ++j) s += binom(k, j) * d_[j] * g.d_[k - j];
            g.d_[k] = -s / d_[0];
        }
        return g;
    }
    Jet operator/(const Jet& o) const { return *this * o.reciprocal(); }

    // Jet of f', one order lower.
    Jet derivative() const {
        Jet r(order() > 0 ? order() - 1 : 0);
        for (int k = 0; k <= r.order(); ++k)
            r.d_[k] = (k + 1 <= order()) ? d_[k + 1] : 0.0;
        return r;
    }
    // Jet of (ln f)' = f'/f, one order lower.
    Jet log_derivative() const { return derivative() / truncated(order() - 1); }

    Jet truncated(int new_order) const {
        if (new_order < 0) new_order = 0;
        Jet r(std::min(new_order, order()));
        for (int k = 0; k <= r.order(); ++k) r.d_[k] = d_[k];
        return r;
    }

    static double binom(int n, int k) {
        double b = 1.0;
        for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
        return b;
    }

private:
    std::vector<double> d_{0.0};
};

inline Jet operator*(double s, const Jet& j) { return j * s; }

// 2x2 matrix of jets; enough structure for U, U^-1 and Omega.
struct JetMat2 {
    Jet a11, a12, a21, a22;

    Jet det() const { return a11 * a22 - a12 * a21; }

    JetMat2 operator+(const JetMat2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    JetMat2 operator-(const JetMat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    JetMat2 operator*(const JetMat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    JetMat2 inverse() const {
        Jet id = det().reciprocal();
        return {a22 * id, -(a12 * id), -(a21 * id), a11 * id};
    }
    JetMat2 derivative() const {
        return {a11.derivative(), a12.derivative(), a21.derivative(),
                a22.derivative()};
    }
    JetMat2 transpose() const { return {a11, a21, a12, a22}; }
};

struct JetVec2 {
    Jet a, b;

    JetVec2 operator+(const JetVec2& o) const { return {a + o.a, b + o.b}; }
    JetVec2 operator-(const JetVec2& o) const { return {a - o.a, b - o.b}; }
    JetVec2 derivative() const { return {a.derivative(), b.derivative()}; }
};

inline JetVec2 operator*(const JetMat2& m, const JetVec2& v) {
    return {m.a11 * v.a + m.a12 * v.b, m.a21 * v.a + m.a22 * v.b};
}

} // namespace dirac
