#include "dirac/darboux.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "dirac/errors.hpp"

namespace dirac {

namespace {

constexpr int det_probe_points = 201;
constexpr int route_probe_points = 9;

std::vector<double> det_zero_scan(const std::function<double(double)>& det,
                                  const Interval& w) {
    std::vector<double> nodes;
    std::vector<double> xs(det_probe_points), fs(det_probe_points);
    for (int i = 0; i < det_probe_points; ++i) {
        xs[static_cast<std::size_t>(i)] =
            w.lo + (w.hi - w.lo) * i / (det_probe_points - 1);
        fs[static_cast<std::size_t>(i)] = det(xs[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < det_probe_points; ++i) {
        const double fx = fs[static_cast<std::size_t>(i)];
        if (fx == 0.0) {
            nodes.push_back(xs[static_cast<std::size_t>(i)]);
            continue;
        }
        if (i == 0) continue;
        const double fprev = fs[static_cast<std::size_t>(i) - 1];
        if (fprev * fx < 0.0) {
            double a = xs[static_cast<std::size_t>(i) - 1], b = xs[static_cast<std::size_t>(i)], fa = fprev;
            while (b - a > 1e-10) {
                const double mid = 0.5 * (a + b), fm = det(mid);
                if (fm == 0.0) { a = b = mid; break; }
                if (fa * fm < 0.0) b = mid;
                else { a = mid; fa = fm; }
            }
            nodes.push_back(0.5 * (a + b));
        }
    }
    // grazing zeros that do not change sign: refine every interior local
    // minimum of |det| and flag it only if the value collapses relative to
    // the bracketing samples, so a large determinant far away cannot mask
    // (or fake) a node
    for (int i = 1; i + 1 < det_probe_points; ++i) {
        const double fl = std::fabs(fs[static_cast<std::size_t>(i) - 1]);
        const double fc = std::fabs(fs[static_cast<std::size_t>(i)]);
        const double fr = std::fabs(fs[static_cast<std::size_t>(i) + 1]);
        if (fc == 0.0 || fc >= fl || fc > fr) continue;
        double a = xs[static_cast<std::size_t>(i) - 1], b = xs[static_cast<std::size_t>(i) + 1];
        while (b - a > 1e-10) {
            const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (std::fabs(det(m1)) < std::fabs(det(m2))) b = m2;
            else a = m1;
        }
        const double xm = 0.5 * (a + b);
        if (std::fabs(det(xm)) <= 1e-10 * std::max(fl, fr))
            nodes.push_back(xm);
    }
    return nodes;
}

int saturating_order(int parent_order) {
    return parent_order == std::numeric_limits<int>::max()
               ? parent_order
               : parent_order;
}

PotentialPtr build_transformed(const EigenSpinor& u1, const EigenSpinor& u2) {
    const PotentialPtr parent = u1.parent();
    const double l1 = u1.E(), l2 = u2.E();
    const Interval dom = parent->domain();
    const int ord = saturating_order(parent->max_deriv_order());

    auto entry_jets = [u1, u2](double x, int order) {
        JetVec2 j1 = u1.jets(x, order);
        JetVec2 j2 = u2.jets(x, order);
        return JetMat2{j1.a, j2.a, j1.b, j2.b};
    };

    ScalarField p1(
        [parent, entry_jets, l1, l2](double x, int k) {
            JetMat2 U = entry_jets(x, k);
            Jet d1 = U.a11 * U.a22 + U.a12 * U.a21;
            Jet val = Jet::constant(0.0, k) - parent->p().jet(x, k) +
                      (l1 - l2) * (d1 / U.det());
            return val[static_cast<std::size_t>(k)];
        },
        ord, dom);
    ScalarField q1(
        [parent, entry_jets, l1, l2](double x, int k) {
            JetMat2 U = entry_jets(x, k);
            Jet d2 = U.a21 * U.a22 - U.a11 * U.a12;
            Jet val = Jet::constant(0.0, k) - parent->q().jet(x, k) +
                      (l1 - l2) * (d2 / U.det());
            return val[static_cast<std::size_t>(k)];
        },
        ord, dom);

    return std::make_shared<Potential>(std::move(p1), std::move(q1),
                                       parent->working_interval(),
                                       std::numeric_limits<double>::quiet_NaN(),
                                       parent->rep());
}

} // namespace

TransformFunction::TransformFunction(EigenSpinor u1, EigenSpinor u2,
                                     bool allow_singular)
    : u1_(std::move(u1)), u2_(std::move(u2)) {
    if (!u1_.parent() || u1_.parent() != u2_.parent())
        throw Error("transformation seeds must share one parent potential");
    parent_ = u1_.parent();
    if (u1_.E() == u2_.E()) throw EqualEigenvalues("lambda1 == lambda2");
    if (!allow_singular) {
        auto det = [this](double x) { return matrix(x).det(); };
        auto nodes = det_zero_scan(det, parent_->working_interval());
        if (!nodes.empty()) throw DegenerateOnGrid(std::move(nodes));
    }
    transformed_ = build_transformed(u1_, u2_);
}

Mat2 TransformFunction::matrix(double x) const {
    const Vec2 a = u1_.value(x), b = u2_.value(x);
    return {a.a, b.a, a.b, b.b};
}

JetMat2 TransformFunction::matrix_jets(double x, int order) const {
    JetVec2 j1 = u1_.jets(x, order);
    JetVec2 j2 = u2_.jets(x, order);
    return {j1.a, j2.a, j1.b, j2.b};
}

Mat2 TransformFunction::omega(double x) const {
    JetMat2 om = omega_jets(x, 0);
    return {om.a11.value(), om.a12.value(), om.a21.value(), om.a22.value()};
}

JetMat2 TransformFunction::omega_jets(double x, int order) const {
    JetMat2 U = matrix_jets(x, order + 1);
    return U.derivative() * U.inverse();
}

TransformFunction build_transform(const EigenSpinor& u1, const EigenSpinor& u2,
                                  bool allow_singular) {
    return TransformFunction(u1, u2, allow_singular);
}

PotentialPtr transformed_potential(const TransformFunction& T) {
    return T.transformed();
}

Mat2 transformed_potential_omega_route(const TransformFunction& T, double x) {
    const Mat2 omega = -1.0 * T.omega(x);
    const Mat2 D = omega * GAMMA - GAMMA * omega;
    return T.parent()->at(x, 0) + D;
}

Vec2 apply_forward_algebraic(const TransformFunction& T, const EigenSpinor& psi,
                             double x) {
    const Mat2 U = T.matrix(x);
    const Mat2 lam{T.lambda1(), 0.0, 0.0, T.lambda2()};
    const Mat2 A = U * lam * mat2_inverse(U) - psi.E() * IDENTITY;
    return GAMMA * (A * psi.value(x));
}

EigenSpinor apply_forward(const TransformFunction& T, const EigenSpinor& psi) {
    if (psi.parent() != T.parent())
        throw Error("apply_forward: spinor not bound to the parent potential");
    const EigenSpinor u1 = T.u1(), u2 = T.u2();
    auto jet_fn = [u1, u2, psi](double x, int order) {
        JetVec2 j1 = u1.jets(x, order + 1);
        JetVec2 j2 = u2.jets(x, order + 1);
        JetMat2 U{j1.a, j2.a, j1.b, j2.b};
        JetMat2 om = U.derivative() * U.inverse();
        JetVec2 pj = psi.jets(x, order + 1);
        JetVec2 dpj = pj.derivative();
        JetVec2 res = dpj - om * JetVec2{pj.a.truncated(order),
                                         pj.b.truncated(order)};
        return res;
    };
    EigenSpinor phi = EigenSpinor::with_jets(
        T.transformed(), psi.E(), jet_fn,
        psi.label().empty() ? "L()" : "L(" + psi.label() + ")");

    // spot-check the algebraic route
    const Interval w = T.parent()->working_interval();
    for (int i = 0; i < route_probe_points; ++i) {
        const double x = w.lo + (w.hi - w.lo) * (i + 0.5) / route_probe_points;
        const Vec2 a = phi.value(x);
        const Vec2 b = apply_forward_algebraic(T, psi, x);
        // kernel elements map to ~0 while the cancelling terms can be huge,
        // so the comparison scale must include the input magnitude
        const double input_scale =
            psi.value(x).norm_inf() * std::max(1.0, T.omega(x).norm_max());
        const double scale = std::max(
            {1.0, a.norm_inf(), b.norm_inf(), input_scale});
        if ((a - b).norm_inf() > 1e-8 * scale)
            throw Error("apply_forward: derivative and algebraic routes disagree");
    }
    return phi;
}

TransformFunction partner_matrix(const TransformFunction& T) {
    const EigenSpinor u1 = T.u1(), u2 = T.u2();
    auto col = [u1, u2](int which, double x, int order) {
        JetVec2 j1 = u1.jets(x, order);
        JetVec2 j2 = u2.jets(x, order);
        JetMat2 U{j1.a, j2.a, j1.b, j2.b};
        Jet idet = U.det().reciprocal();
        if (which == 0) return JetVec2{U.a22 * idet, -(U.a12 * idet)};
        return JetVec2{-(U.a21 * idet), U.a11 * idet};
    };
    EigenSpinor v1 = EigenSpinor::with_jets(
        T.transformed(), T.lambda1(),
        [col](double x, int order) { return col(0, x, order); }, "V.col1");
    EigenSpinor v2 = EigenSpinor::with_jets(
        T.transformed(), T.lambda2(),
        [col](double x, int order) { return col(1, x, order); }, "V.col2");
    return build_transform(v1, v2);
}

EigenSpinor apply_adjoint(const TransformFunction& T, const EigenSpinor& phi) {
    if (phi.parent() != T.transformed())
        throw Error("apply_adjoint: spinor not bound to the transformed potential");
    const EigenSpinor u1 = T.u1(), u2 = T.u2();
    auto jet_fn = [u1, u2, phi](double x, int order) {
        JetVec2 j1 = u1.jets(x, order + 1);
        JetVec2 j2 = u2.jets(x, order + 1);
        JetMat2 U{j1.a, j2.a, j1.b, j2.b};
        JetMat2 omt = (U.derivative() * U.inverse()).transpose();
        JetVec2 pj = phi.jets(x, order + 1);
        JetVec2 dpj = pj.derivative();
        JetVec2 t = omt * JetVec2{pj.a.truncated(order), pj.b.truncated(order)};
        return JetVec2{Jet::constant(0.0, order) - dpj.a - t.a,
                       Jet::constant(0.0, order) - dpj.b - t.b};
    };
    return EigenSpinor::with_jets(
        T.parent(), phi.E(), jet_fn,
        phi.label().empty() ? "L+()" : "L+(" + phi.label() + ")");
}

namespace {

std::vector<double> component_nodes(const EigenSpinor& s, bool first,
                                    const Interval& w) {
    auto f = [&s, first](double x) {
        const Vec2 v = s.value(x);
        return first ? v.a : v.b;
    };
    return det_zero_scan(f, w);
}

} // namespace

EigenSpinor PseudoscalarStep::map(const EigenSpinor& psi) const {
    if (psi.parent() != V0)
        throw Error("pseudoscalar map: spinor not bound to the seed potential");
    const double l2 = lambda2, E = psi.E();
    auto seed = log_seed;
    if (branch == PSBranch::upper) {
        auto jet_fn = [seed, psi, l2, E](double x, int order) {
            JetVec2 pj = psi.jets(x, order + 1);
            Jet p2 = pj.b.truncated(order);
            Jet q1 = seed(x, order + 1).log_derivative();
            return JetVec2{(l2 - E) * p2, pj.b.derivative() - q1 * p2};
        };
        return EigenSpinor::with_jets(V1, E, jet_fn, "ps_map");
    }
    auto jet_fn = [seed, psi, l2, E](double x, int order) {
        JetVec2 pj = psi.jets(x, order + 1);
        Jet p1 = pj.a.truncated(order);
        Jet lu12 = seed(x, order + 1).log_derivative();
        return JetVec2{pj.a.derivative() - lu12 * p1, (E - l2) * p1};
    };
    return EigenSpinor::with_jets(V1, E, jet_fn, "ps_map");
}

PseudoscalarStep pseudoscalar_step(const PotentialPtr& V, const EigenSpinor& u2,
                                   PSBranch branch) {
    if (!V || !V->is_pseudoscalar())
        throw WrongBranch("pseudoscalar_step needs a pseudoscalar potential");
    if (u2.parent() != V)
        throw Error("pseudoscalar_step: seed not bound to the potential");
    const double m = V->mass();
    const double l1 = (branch == PSBranch::upper) ? m : -m;
    if (u2.E() == l1) throw EqualEigenvalues("lambda2 equals the mass eigenvalue");

    const bool use_second = (branch == PSBranch::upper);
    if (!component_nodes(u2, !use_second, V->working_interval()).empty())
        throw NodeInLog("log-derivative seed component vanishes on the interval");

    PseudoscalarStep step;
    step.V0 = V;
    step.mass_in = m;
    step.lambda2 = u2.E();
    step.branch = branch;
    step.u2 = u2;
    step.mass_out = (branch == PSBranch::upper) ? -u2.E() : u2.E();

    EigenSpinor seed_spinor = u2;
    step.log_seed = [seed_spinor, use_second](double x, int order) {
        JetVec2 j = seed_spinor.jets(x, order);
        return use_second ? j.b : j.a;
    };

    auto seed = step.log_seed;
    const double sign = (branch == PSBranch::upper) ? 1.0 : -1.0;
    ScalarField q1(
        [seed, sign](double x, int k) {
            Jet l = seed(x, k + 1).log_derivative();
            return sign * l[static_cast<std::size_t>(k)];
        },
        saturating_order(V->max_deriv_order()), V->domain());
    step.V1 = std::make_shared<Potential>(
        ScalarField(ScalarField::Provider([mo = step.mass_out](double, int k) {
                        return k == 0 ? mo : 0.0;
                    }),
                    std::numeric_limits<int>::max(), V->domain()),
        std::move(q1), V->working_interval(), step.mass_out);
    return step;
}

PseudoscalarStep pseudoscalar_step(const PotentialPtr& V, const EigenSpinor& u1,
                                   const EigenSpinor& u2, PSBranch branch) {
    const Interval w = V->working_interval();
    const double m = V ? V->mass() : 0.0;
    for (int i = 0; i < 33; ++i) {
        const double x = w.lo + (w.hi - w.lo) * (i + 0.5) / 33;
        const Vec2 v = u1.value(x);
        const double zero_comp = (branch == PSBranch::upper) ? v.b : v.a;
        if (std::fabs(zero_comp) > 1e-10 * std::max(1.0, v.norm_inf()))
            throw WrongBranch("seed component not identically zero");
    }
    const double l1_expected = (branch == PSBranch::upper) ? m : -m;
    if (std::fabs(u1.E() - l1_expected) > 1e-12)
        throw WrongBranch("zero-component seed must sit at the mass eigenvalue");
    return pseudoscalar_step(V, u2, branch);
}

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

} // namespace

EigenSpinor ScalarStep::map(const EigenSpinor& psi) const {
    if (psi.parent() != V0)
        throw Error("scalar map: spinor not bound to the seed potential");
    const bool hat = (V0->rep() == ScalarRep::hat);
    auto j11 = uhat11, j21 = uhat21;
    auto jet_fn = [j11, j21, psi, hat](double x, int order) {
        JetVec2 pj = psi.jets(x, order + 1);
        Jet a = pj.a, b = pj.b;
        if (!hat) {
            Jet na = (a - b) * inv_sqrt2;
            Jet nb = (a + b) * inv_sqrt2;
            a = na;
            b = nb;
        }
        Jet l11 = j11(x, order + 1).log_derivative();
        Jet l21 = j21(x, order + 1).log_derivative();
        Jet f1 = a.derivative() - l11 * a.truncated(order);
        Jet f2 = b.derivative() - l21 * b.truncated(order);
        if (hat) return JetVec2{f1, f2};
        return JetVec2{(f1 + f2) * inv_sqrt2, (f2 - f1) * inv_sqrt2};
    };
    return EigenSpinor::with_jets(V1, psi.E(), jet_fn, "sc_map");
}

EigenSpinor ScalarStep::partner_column(int i) const {
    const bool hat = (V0->rep() == ScalarRep::hat);
    auto j11 = uhat11, j21 = uhat21;
    const double sgn = (i == 0) ? 1.0 : -1.0;
    auto jet_fn = [j11, j21, hat, sgn](double x, int order) {
        Jet a = sgn * 0.5 * j11(x, order).reciprocal();
        Jet b = 0.5 * j21(x, order).reciprocal();
        if (hat) return JetVec2{a, b};
        return JetVec2{(a + b) * inv_sqrt2, (b - a) * inv_sqrt2};
    };
    return EigenSpinor::with_jets(V1, (i == 0) ? lambda : -lambda, jet_fn,
                                  i == 0 ? "Vhat.col1" : "Vhat.col2");
}

ScalarStep scalar_step(const PotentialPtr& V, const EigenSpinor& u1) {
    if (!V || !V->is_scalar())
        throw WrongBranch("scalar_step needs a scalar potential");
    if (u1.parent() != V)
        throw Error("scalar_step: seed not bound to the potential");
    if (std::isnan(V->mass()))
        throw Error("scalar_step: potential mass undetermined");

    const bool hat = (V->rep() == ScalarRep::hat);
    EigenSpinor seed = u1;
    auto jet11 = [seed, hat](double x, int order) {
        JetVec2 j = seed.jets(x, order);
        return hat ? j.a : (j.a - j.b) * inv_sqrt2;
    };
    auto jet21 = [seed, hat](double x, int order) {
        JetVec2 j = seed.jets(x, order);
        return hat ? j.b : (j.a + j.b) * inv_sqrt2;
    };
    const Interval w = V->working_interval();
    auto nodes = det_zero_scan([&](double x) { return jet11(x, 0).value(); }, w);
    auto nodes2 = det_zero_scan([&](double x) { return jet21(x, 0).value(); }, w);
    if (!nodes.empty() || !nodes2.empty())
        throw NodeInLog("hat-representation seed combination vanishes");

    ScalarStep step;
    step.V0 = V;
    step.mass = V->mass();
    step.lambda = u1.E();
    step.uhat11 = jet11;
    step.uhat21 = jet21;

    // m + S1 = (m + S0) + (ln uhat21)' - (ln uhat11)'
    const ScalarField base = hat ? V->q() : V->p();
    ScalarField ms1(
        [base, jet11, jet21](double x, int k) {
            Jet diff = jet21(x, k + 1).log_derivative() -
                       jet11(x, k + 1).log_derivative();
            return base.deriv(x, k) + diff[static_cast<std::size_t>(k)];
        },
        saturating_order(V->max_deriv_order()), V->domain());
    ScalarField zero(ScalarField::Provider([](double, int) { return 0.0; }),
                     std::numeric_limits<int>::max(), V->domain());
    if (hat)
        step.V1 = std::make_shared<Potential>(std::move(zero), std::move(ms1), w,
                                              V->mass(), ScalarRep::hat);
    else
        step.V1 = std::make_shared<Potential>(std::move(ms1), std::move(zero), w,
                                              V->mass(), ScalarRep::sigma3);
    return step;
}

} // namespace dirac
