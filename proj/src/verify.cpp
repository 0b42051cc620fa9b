#include "dirac/verify.hpp"

#include <cmath>
#include <cstdio>

#include "dirac/quadrature.hpp"

namespace dirac {

std::string ResidualReport::line() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%s,%.12g,%.12g,%s", check.c_str(),
                  example.c_str(), max_residual, tol, pass() ? "pass" : "fail");
    return buf;
}

std::vector<double> verification_grid(Interval iv, int points, double guard) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(points));
    const double lo = iv.lo + guard, hi = iv.hi - guard;
    for (int i = 0; i < points; ++i)
        g.push_back(lo + (hi - lo) * i / (points - 1));
    return g;
}

namespace {

std::string grid_desc(Interval iv, int points) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "[%g,%g]x%d", iv.lo, iv.hi, points);
    return buf;
}

JetVec2 gamma_apply(const JetVec2& v) {
    return {v.b, Jet::constant(0.0, v.a.order()) - v.a};
}

// (h - l1)(h - l2) s at x, with h applied literally through the recurrence
// jets (second derivatives and potential derivatives included).
Vec2 h_poly_apply(const EigenSpinor& s, const Potential& V, double l1,
                  double l2, double x) {
    JetVec2 pj = s.recurrence_jets(x, 2);
    Jet p = V.p().jet(x, 1), q = V.q().jet(x, 1);
    JetMat2 Vj{p, q, q, Jet::constant(0.0, 1) - p};
    JetVec2 t{pj.a.truncated(1), pj.b.truncated(1)};
    JetVec2 chi = gamma_apply(pj.derivative()) + Vj * t;
    chi = {chi.a - l2 * t.a, chi.b - l2 * t.b};
    const Vec2 cv{chi.a.value(), chi.b.value()};
    const Vec2 cd{chi.a[1], chi.b[1]};
    return GAMMA * cd + V.at(x, 0) * cv - l1 * cv;
}

} // namespace

ResidualReport intertwining_residual(const TransformFunction& T,
                                     const EigenSpinor& psi, Interval iv,
                                     double tol, int points) {
    ResidualReport rep{"intertwining", psi.label(), grid_desc(iv, points), 0.0,
                       iv.lo, tol};
    EigenSpinor phi = apply_forward(T, psi);
    for (double x : verification_grid(iv, points)) {
        const double r =
            dirac_residual(phi, *T.transformed(), psi.E(), x).norm_inf();
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.argmax = x;
        }
    }
    return rep;
}

ResidualReport equation_residual(const EigenSpinor& phi, const Potential& V,
                                 Interval iv, double tol, int points) {
    ResidualReport rep{"dirac_equation", phi.label(), grid_desc(iv, points),
                       0.0, iv.lo, tol};
    for (double x : verification_grid(iv, points)) {
        const double r = dirac_residual(phi, V, phi.E(), x).norm_inf();
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.argmax = x;
        }
    }
    return rep;
}

ResidualReport factorization_residual(const TransformFunction& T,
                                      const EigenSpinor& psi, Interval iv,
                                      double tol, int points) {
    ResidualReport rep{"factorization", psi.label(), grid_desc(iv, points),
                       0.0, iv.lo, tol};
    const double l1 = T.lambda1(), l2 = T.lambda2();
    EigenSpinor phi = apply_forward(T, psi);
    EigenSpinor back = apply_adjoint(T, phi);       // L+L psi
    // when psi sits exactly at a transform eigenvalue its image is the zero
    // spinor up to roundoff, so the L L+ branch would only amplify noise
    const bool kernel_energy = (psi.E() == l1) || (psi.E() == l2);
    std::shared_ptr<EigenSpinor> fwd2;
    if (!kernel_energy)
        fwd2 = std::make_shared<EigenSpinor>(
            apply_forward(T, apply_adjoint(T, phi))); // L L+ phi
    for (double x : verification_grid(iv, points)) {
        const Vec2 lhs0 = back.value(x);
        const Vec2 rhs0 = h_poly_apply(psi, *T.parent(), l1, l2, x);
        double scale = std::max(
            {1.0, psi.value(x).norm_inf(), lhs0.norm_inf(), rhs0.norm_inf()});
        double r = (lhs0 - rhs0).norm_inf();
        if (!kernel_energy) {
            const Vec2 lhs1 = fwd2->value(x);
            const Vec2 rhs1 = h_poly_apply(phi, *T.transformed(), l1, l2, x);
            scale = std::max({scale, lhs1.norm_inf(), rhs1.norm_inf()});
            r = std::max(r, (lhs1 - rhs1).norm_inf());
        }
        r /= scale;
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.argmax = x;
        }
    }
    return rep;
}

double norm_preservation(const TransformFunction& T, const EigenSpinor& psi,
                         Interval iv, double quad_tol) {
    const double n2 = (psi.E() - T.lambda1()) * (psi.E() - T.lambda2());
    if (n2 <= 0.0)
        throw NonPositiveNormalization("(E-lambda1)(E-lambda2) <= 0");
    EigenSpinor phi = apply_forward(T, psi);
    auto sq = [](const EigenSpinor& s) {
        return [s](double x) {
            const Vec2 v = s.value(x);
            return v.a * v.a + v.b * v.b;
        };
    };
    const double num = quad(sq(phi), iv.lo, iv.hi, quad_tol);
    const double den = quad(sq(psi), iv.lo, iv.hi, quad_tol);
    if (den == 0.0) throw NonPositiveNormalization("zero seed norm");
    return num / (n2 * den);
}

namespace {

struct Fit {
    double slope = 0.0;
    double r2 = 0.0;
    bool flat = false;
};

Fit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double dn = static_cast<double>(n);
    const double denom = dn * sxx - sx * sx;
    Fit fit;
    fit.slope = (dn * sxy - sx * sy) / denom;
    const double b = (sy - fit.slope * sx) / dn;
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / dn;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = fit.slope * xs[i] + b;
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    if (ss_tot < 1e-12) {
        fit.flat = true;
        fit.r2 = 0.0;
    } else {
        fit.r2 = 1.0 - ss_res / ss_tot;
    }
    return fit;
}

// Fits log||phi|| on a tail window against x (exponential model) and against
// log|x| (polynomial model).
struct TailFit {
    Fit exp_fit, poly_fit;
    bool valid = false;
    bool poly_valid = false;
};

TailFit fit_tail(const EigenSpinor& phi, double a, double b) {
    constexpr int pts = 40;
    std::vector<double> xs, ys, lxs;
    bool poly_ok = true;
    for (int i = 0; i < pts; ++i) {
        const double x = a + (b - a) * i / (pts - 1);
        const Vec2 v = phi.value(x);
        const double nrm = std::sqrt(v.a * v.a + v.b * v.b);
        if (nrm <= 0.0 || !std::isfinite(nrm)) continue;
        xs.push_back(x);
        ys.push_back(std::log(nrm));
        if (std::fabs(x) < 1e-3) poly_ok = false;
        else lxs.push_back(std::log(std::fabs(x)));
    }
    TailFit tf;
    if (xs.size() < 8) return tf;
    tf.valid = true;
    tf.exp_fit = linear_fit(xs, ys);
    if (poly_ok && lxs.size() == xs.size()) {
        tf.poly_valid = true;
        tf.poly_fit = linear_fit(lxs, ys);
    }
    return tf;
}

// decreasing toward the outward direction with a trustworthy exponential fit
bool tail_decays(const TailFit& tf, bool rightward) {
    if (!tf.valid || tf.exp_fit.flat) return false;
    const double outward = rightward ? -tf.exp_fit.slope : tf.exp_fit.slope;
    if (outward <= 0.0) return false;
    if (tf.exp_fit.r2 < 0.99) return false;
    if (tf.poly_valid && tf.poly_fit.r2 > tf.exp_fit.r2) return false;
    return true;
}

bool tail_grows(const TailFit& tf, bool rightward) {
    if (!tf.valid) return false;
    if (tf.exp_fit.flat) return true; // bounded-away-from-zero tail
    const double outward = rightward ? tf.exp_fit.slope : -tf.exp_fit.slope;
    return outward > 0.0 && tf.exp_fit.r2 >= 0.99;
}

} // namespace

Decay decay_classify(const EigenSpinor& phi, Interval window) {
    const double len = window.hi - window.lo;
    const bool half_line = window.lo >= 0.0;
    const TailFit right = fit_tail(phi, window.hi - 0.2 * len, window.hi);
    if (half_line) {
        if (tail_decays(right, true)) return Decay::integrable;
        if (tail_grows(right, true)) return Decay::non_integrable;
        return Decay::indeterminate;
    }
    const TailFit left = fit_tail(phi, window.lo, window.lo + 0.2 * len);
    if (tail_decays(left, false) && tail_decays(right, true))
        return Decay::integrable;
    if (tail_grows(left, false) || tail_grows(right, true))
        return Decay::non_integrable;
    return Decay::indeterminate;
}

ResidualReport superalgebra_residual(const TransformFunction& T,
                                     const EigenSpinor& psi, Interval iv,
                                     double tol, int points) {
    ResidualReport rep{"superalgebra", psi.label(), grid_desc(iv, points), 0.0,
                       iv.lo, tol};
    const double l1 = T.lambda1(), l2 = T.lambda2();
    EigenSpinor phi = apply_forward(T, psi);
    EigenSpinor qq_lower = apply_adjoint(T, phi);                // L+L psi
    EigenSpinor qq_upper = apply_forward(T, apply_adjoint(T, phi)); // LL+ phi
    for (double x : verification_grid(iv, points)) {
        // [Q,H] block: (L h0 - h1 L) psi = (E - h1) L psi
        const double comm =
            dirac_residual(phi, *T.transformed(), psi.E(), x).norm_inf();
        // {Q,Q+} - (H-l1)(H-l2), both blocks
        const Vec2 a0 = qq_lower.value(x) - h_poly_apply(psi, *T.parent(), l1, l2, x);
        const Vec2 a1 =
            qq_upper.value(x) - h_poly_apply(phi, *T.transformed(), l1, l2, x);
        const double r =
            std::max(comm, std::max(a0.norm_inf(), a1.norm_inf()));
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.argmax = x;
        }
    }
    return rep;
}

} // namespace dirac
