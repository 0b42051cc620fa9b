#pragma once

#include <functional>
#include <string>
#include <utility>

#include "dirac/jet.hpp"
#include "dirac/mat2.hpp"
#include "dirac/potential.hpp"

namespace dirac {

// Two-component solution of h psi = E psi bound to its potential.
//
// Derivatives are never taken numerically. Two exact routes exist:
//  - the recurrence psi' = gamma (V - E) psi from the equation itself
//    (spinor_derivative), available for every spinor;
//  - "structural" jets differentiating the spinor's construction formula
//    (closed form, quadrature, or a Darboux map), used by the verification
//    suites so residual checks are not circular.
// For closed-form seeds the two coincide by construction.
class EigenSpinor {
public:
    using ValueFn = std::function<Vec2(double)>;
    using JetFn = std::function<JetVec2(double, int)>;

    EigenSpinor() = default;

    static EigenSpinor closed_form(PotentialPtr parent, double E, ValueFn value,
                                   std::string label = {});
    static EigenSpinor with_jets(PotentialPtr parent, double E, JetFn jets,
                                 std::string label = {});

    Vec2 value(double x) const { return jets_ ? from_jet(x) : value_(x); }
    // Exact n-th derivative via the Dirac recurrence.
    Vec2 deriv(double x, int n) const;
    // Structural jets of both components up to the given order.
    JetVec2 jets(double x, int order) const;
    // Jets via the recurrence (independent of the structural route).
    JetVec2 recurrence_jets(double x, int order) const;

    double E() const { return E_; }
    const PotentialPtr& parent() const { return parent_; }
    const std::string& label() const { return label_; }

private:
    Vec2 from_jet(double x) const {
        JetVec2 j = jets_(x, 0);
        return {j.a.value(), j.b.value()};
    }

    PotentialPtr parent_;
    double E_ = 0.0;
    ValueFn value_;
    JetFn jets_;
    std::string label_;
};

Vec2 spinor_derivative(const EigenSpinor& psi, int n, double x);

double wronskian(const EigenSpinor& a, const EigenSpinor& b, double x);

// Second linearly independent solution at the same E by quadrature,
// normalized so that W(result, psi) = 1. The cumulative integral is
// memoized on a grid over the parent's working interval.
EigenSpinor second_solution(const EigenSpinor& psi,
                            double x0 = std::numeric_limits<double>::quiet_NaN());

// Residual of the Dirac equation gamma psi' + V psi - E psi using the
// structural derivative, i.e. a genuine check that psi solves (V, E).
Vec2 dirac_residual(const EigenSpinor& psi, const Potential& V, double E,
                    double x);

} // namespace dirac
