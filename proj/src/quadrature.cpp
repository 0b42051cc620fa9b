#include "dirac/quadrature.hpp"

#include <cmath>

#include "dirac/errors.hpp"

namespace dirac {

namespace {

constexpr long max_subintervals = 1L << 20;

struct Budget {
    long used = 0;
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             Budget& budget) {
    if (++budget.used > max_subintervals)
        throw NoConvergence("quad: subdivision budget exhausted");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (std::fabs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, budget) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, budget);
}

} // namespace

double quad(const std::function<double(double)>& f, double a, double b,
            double tol) {
    if (a == b) return 0.0;
    Budget budget;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw NoConvergence("quad: non-finite integrand");
    const double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, a, b, fa, fm, fb, whole, tol, budget);
}

} // namespace dirac
