#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <utility>

#include "dirac/errors.hpp"
#include "dirac/jet.hpp"

namespace dirac {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x > lo && x < hi; }
};

inline const Interval whole_line{};

// Real function of x with analytic derivatives up to a declared order.
// The provider signature is f(x, k) -> f^(k)(x).
class ScalarField {
public:
    using Provider = std::function<double(double, int)>;

    ScalarField() : ScalarField(0.0) {}

    ScalarField(Provider f, int max_order, Interval dom = whole_line)
        : f_(std::move(f)), max_order_(max_order), domain_(dom) {}

    // Constant field, derivatives of every order available.
    ScalarField(double c)
        : f_([c](double, int k) { return k == 0 ? c : 0.0; }),
          max_order_(std::numeric_limits<int>::max()),
          domain_(whole_line) {}

    double operator()(double x) const { return deriv(x, 0); }

    double deriv(double x, int k) const {
        if (!domain_.contains(x)) throw OutOfDomain("x outside field domain");
        if (k > max_order_) throw OrderUnavailable("derivative order too high");
        return f_(x, k);
    }

    Jet jet(double x, int order) const {
        Jet j(order);
        for (int k = 0; k <= order; ++k) j[k] = deriv(x, k);
        return j;
    }

    int max_order() const { return max_order_; }
    const Interval& domain() const { return domain_; }

private:
    Provider f_;
    int max_order_;
    Interval domain_;
};

// Central-difference oracle used only to cross-check analytic providers.
inline double fd_derivative(const ScalarField& f, double x, int order,
                            double h = 1e-4) {
    if (!f.domain().contains(x - h) || !f.domain().contains(x + h))
        throw OutOfDomain("stencil leaves field domain");
    if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
    if (order == 2) return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    throw OrderUnavailable("fd_derivative supports orders 1 and 2");
}

} // namespace dirac
