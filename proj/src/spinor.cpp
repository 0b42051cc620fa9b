#include "dirac/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dirac/errors.hpp"
#include "dirac/quadrature.hpp"

namespace dirac {

EigenSpinor EigenSpinor::closed_form(PotentialPtr parent, double E, ValueFn value,
                                     std::string label) {
    EigenSpinor s;
    s.parent_ = std::move(parent);
    s.E_ = E;
    s.value_ = std::move(value);
    s.label_ = std::move(label);
    return s;
}

EigenSpinor EigenSpinor::with_jets(PotentialPtr parent, double E, JetFn jets,
                                   std::string label) {
    EigenSpinor s;
    s.parent_ = std::move(parent);
    s.E_ = E;
    s.jets_ = std::move(jets);
    s.label_ = std::move(label);
    return s;
}

JetVec2 EigenSpinor::recurrence_jets(double x, int order) const {
    if (order > 0 && order - 1 > parent_->max_deriv_order())
        throw OrderUnavailable("spinor derivative order exceeds potential data");
    std::vector<Mat2> vk(static_cast<std::size_t>(std::max(order, 1)));
    for (int k = 0; k < order; ++k) vk[static_cast<std::size_t>(k)] = parent_->at(x, k);
    std::vector<Vec2> d(static_cast<std::size_t>(order) + 1);
    const Vec2 v0 = value(x);
    d[0] = v0;
    for (int n = 0; n < order; ++n) {
        Vec2 acc = vk[0] * d[static_cast<std::size_t>(n)] - E_ * d[static_cast<std::size_t>(n)];
        for (int k = 1; k <= n; ++k)
            acc = acc + Jet::binom(n, k) * (vk[static_cast<std::size_t>(k)] *
                                            d[static_cast<std::size_t>(n - k)]);
        d[static_cast<std::size_t>(n) + 1] = GAMMA * acc;
    }
    JetVec2 out{Jet(order), Jet(order)};
    for (int k = 0; k <= order; ++k) {
        out.a[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k)].a;
        out.b[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k)].b;
    }
    return out;
}

Vec2 EigenSpinor::deriv(double x, int n) const {
    JetVec2 j = recurrence_jets(x, n);
    return {j.a[static_cast<std::size_t>(n)], j.b[static_cast<std::size_t>(n)]};
}

JetVec2 EigenSpinor::jets(double x, int order) const {
    if (jets_) return jets_(x, order);
    return recurrence_jets(x, order);
}

Vec2 spinor_derivative(const EigenSpinor& psi, int n, double x) {
    return psi.deriv(x, n);
}

double wronskian(const EigenSpinor& a, const EigenSpinor& b, double x) {
    const Vec2 va = a.value(x), vb = b.value(x);
    return va.a * vb.b - va.b * vb.a;
}

Vec2 dirac_residual(const EigenSpinor& psi, const Potential& V, double E,
                    double x) {
    JetVec2 j = psi.jets(x, 1);
    const Vec2 v{j.a.value(), j.b.value()};
    const Vec2 dv{j.a[1], j.b[1]};
    return GAMMA * dv + V.at(x, 0) * v - E * v;
}

namespace {

// Cumulative integral of g over the working interval, memoized on a grid.
class CumulativeIntegral {
public:
    CumulativeIntegral(std::function<double(double)> g, double x0, double lo,
                       double hi, int n = 1024)
        : g_(std::move(g)), nodes_(static_cast<std::size_t>(n) + 1),
          cum_(static_cast<std::size_t>(n) + 1, 0.0) {
        for (int i = 0; i <= n; ++i)
            nodes_[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / n;
        // anchor grid at x0 by shifting afterwards
        for (int i = 1; i <= n; ++i)
            cum_[static_cast<std::size_t>(i)] =
                cum_[static_cast<std::size_t>(i) - 1] +
                quad(g_, nodes_[static_cast<std::size_t>(i) - 1],
                     nodes_[static_cast<std::size_t>(i)], 1e-12);
        shift_ = -eval_raw(x0);
    }

    double operator()(double x) const { return eval_raw(x) + shift_; }

private:
    double eval_raw(double x) const {
        if (x <= nodes_.front()) {
            const double head = (x == nodes_.front())
                                    ? 0.0
                                    : -quad(g_, x, nodes_.front(), 1e-12);
            return head;
        }
        if (x >= nodes_.back())
            return cum_.back() +
                   (x == nodes_.back() ? 0.0 : quad(g_, nodes_.back(), x, 1e-12));
        const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
        return cum_[i] + quad(g_, nodes_[i], x, 1e-12);
    }

    std::function<double(double)> g_;
    std::vector<double> nodes_;
    std::vector<double> cum_;
    double shift_ = 0.0;
};

// Sign-change scan with bisection refinement; returns refined node abscissae.
std::vector<double> find_nodes(const std::function<double(double)>& f, double lo,
                               double hi, int n = 512) {
    std::vector<double> nodes;
    double xprev = lo, fprev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double fx = f(x);
        if (fprev == 0.0) nodes.push_back(xprev);
        else if (fprev * fx < 0.0) {
            double a = xprev, b = x, fa = fprev;
            while (b - a > 1e-10) {
                const double m = 0.5 * (a + b), fm = f(m);
                if (fm == 0.0) { a = b = m; break; }
                if (fa * fm < 0.0) b = m;
                else { a = m; fa = fm; }
            }
            nodes.push_back(0.5 * (a + b));
        }
        xprev = x;
        fprev = fx;
    }
    return nodes;
}

} // namespace

EigenSpinor second_solution(const EigenSpinor& psi, double x0) {
    const PotentialPtr& V = psi.parent();
    const Interval w = V->working_interval();
    const double E = psi.E();
    if (std::isnan(x0))
        x0 = std::isfinite(V->domain().lo) ? V->domain().lo + 1.0 : 0.0;

    const auto comp1 = [&psi](double x) { return psi.value(x).a; };
    const auto comp2 = [&psi](double x) { return psi.value(x).b; };
    const bool first_ok = find_nodes(comp1, w.lo, w.hi).empty();
    const bool second_ok = first_ok || find_nodes(comp2, w.lo, w.hi).empty();
    if (!first_ok && !second_ok)
        throw NodeOnInterval("both spinor components vanish on the interval");

    auto shared_psi = std::make_shared<EigenSpinor>(psi);
    if (first_ok) {
        auto integrand = [shared_psi, V, E](double x) {
            const double c = shared_psi->value(x).a;
            return (V->p()(x) + E) / (c * c);
        };
        auto cum = std::make_shared<CumulativeIntegral>(integrand, x0, w.lo, w.hi);
        auto jet_fn = [shared_psi, V, E, cum](double x, int order) {
            JetVec2 pj = shared_psi->recurrence_jets(x, order + 1);
            Jet p1 = pj.a.truncated(order), p2 = pj.b.truncated(order);
            Jet I(order);
            I[0] = (*cum)(x);
            if (order >= 1) {
                Jet g = (V->p().jet(x, order - 1) +
                         Jet::constant(E, order - 1)) /
                        (pj.a.truncated(order - 1) * pj.a.truncated(order - 1));
                for (int k = 1; k <= order; ++k)
                    I[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k) - 1];
            }
            Jet t1 = p1 * I;
            Jet t2 = (t1 * p2 - Jet::constant(1.0, order)) / p1;
            return JetVec2{t1, t2};
        };
        return EigenSpinor::with_jets(V, E, jet_fn,
                                      psi.label().empty() ? "second"
                                                          : psi.label() + "~");
    }

    auto integrand = [shared_psi, V, E](double x) {
        const double c = shared_psi->value(x).b;
        return (E - V->p()(x)) / (c * c);
    };
    auto cum = std::make_shared<CumulativeIntegral>(integrand, x0, w.lo, w.hi);
    auto jet_fn = [shared_psi, V, E, cum](double x, int order) {
        JetVec2 pj = shared_psi->recurrence_jets(x, order + 1);
        Jet p1 = pj.a.truncated(order), p2 = pj.b.truncated(order);
        Jet J(order);
        J[0] = (*cum)(x);
        if (order >= 1) {
            Jet g = (Jet::constant(E, order - 1) - V->p().jet(x, order - 1)) /
                    (pj.b.truncated(order - 1) * pj.b.truncated(order - 1));
            for (int k = 1; k <= order; ++k)
                J[static_cast<std::size_t>(k)] = g[static_cast<std::size_t>(k) - 1];
        }
        Jet t2 = p2 * J;
        Jet t1 = (t2 * p1 + Jet::constant(1.0, order)) / p2;
        return JetVec2{t1, t2};
    };
    return EigenSpinor::with_jets(V, E, jet_fn,
                                  psi.label().empty() ? "second"
                                                      : psi.label() + "~");
}

} // namespace dirac
