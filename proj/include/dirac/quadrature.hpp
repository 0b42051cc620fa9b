#pragma once

#include <functional>

namespace dirac {

// Adaptive Simpson integration. tol is an absolute error target; the
// subdivision budget guards against non-smooth integrands.
double quad(const std::function<double(double)>& f, double a, double b,
            double tol = 1e-10);

} // namespace dirac
