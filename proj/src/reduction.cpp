#include "dirac/reduction.hpp"

#include <cmath>

namespace dirac {

namespace {

ScalarField susy_pot(const ScalarField& f, double plus_sign) {
    return ScalarField(
        [f, plus_sign](double x, int k) {
            Jet fj = f.jet(x, k + 1);
            Jet u = fj * fj + plus_sign * fj.derivative();
            return u[static_cast<std::size_t>(k)];
        },
        f.max_order() == std::numeric_limits<int>::max()
            ? f.max_order()
            : f.max_order() - 1,
        f.domain());
}

} // namespace

SchrodingerPair pseudoscalar_to_schrodinger(const ScalarField& q, double m) {
    return {susy_pot(q, 1.0), susy_pot(q, -1.0), m * m};
}

SchrodingerPair scalar_to_schrodinger(const ScalarField& S, double m) {
    ScalarField ms(
        [S, m](double x, int k) {
            return S.deriv(x, k) + (k == 0 ? m : 0.0);
        },
        S.max_order(), S.domain());
    return {susy_pot(ms, 1.0), susy_pot(ms, -1.0), m * m};
}

SusyDiagramReport susy_diagram_check(const PseudoscalarStep& step,
                                     Interval interval, int points) {
    if (!step.V0 || !step.V1 || !step.log_seed)
        throw MissingStepData("susy_diagram_check needs a completed step");
    SusyDiagramReport rep;
    const double m = step.mass_in;
    const double shift = step.lambda2 * step.lambda2 - m * m;
    rep.energy_shift = shift;

    const ScalarField& q0 = step.V0->q();
    const ScalarField& q1 = step.V1->q();
    const SchrodingerPair p0 = pseudoscalar_to_schrodinger(q0, m);
    const SchrodingerPair p1 = pseudoscalar_to_schrodinger(q1, step.mass_out);

    for (int i = 0; i < points; ++i) {
        const double x =
            interval.lo + (interval.hi - interval.lo) * i / (points - 1);
        const double u0p = p0.U_plus(x), u0m = p0.U_minus(x);
        const double u1p = p1.U_plus(x) + shift, u1m = p1.U_minus(x) + shift;
        // (ln seed)'' where seed is u22 (upper) or u12 (lower)
        const double log_dd = step.log_seed(x, 2).log_derivative()[1];
        const double q0d = q0.deriv(x, 1);
        if (step.branch == PSBranch::upper) {
            rep.max_coincidence =
                std::max(rep.max_coincidence, std::fabs(u1p - u0m));
            rep.max_delta_minus = std::max(
                rep.max_delta_minus, std::fabs((u1m - u0m) + 2.0 * log_dd));
            rep.max_delta_plus = std::max(
                rep.max_delta_plus, std::fabs((u1p - u0p) + 2.0 * q0d));
        } else {
            rep.max_coincidence =
                std::max(rep.max_coincidence, std::fabs(u1m - u0p));
            rep.max_delta_plus = std::max(
                rep.max_delta_plus, std::fabs((u1p - u0p) + 2.0 * log_dd));
            rep.max_delta_minus = std::max(
                rep.max_delta_minus, std::fabs((u1m - u0m) - 2.0 * q0d));
        }
    }
    return rep;
}

} // namespace dirac
