#pragma once

#include <string>
#include <vector>

#include "dirac/chain.hpp"
#include "dirac/darboux.hpp"

namespace dirac {

struct ResidualReport {
    std::string check;
    std::string example;
    std::string grid;
    double max_residual = 0.0;
    double argmax = 0.0;
    double tol = 0.0;

    bool pass() const { return max_residual <= tol; }
    // check,example,max_residual,tolerance,pass
    std::string line() const;
};

// 201 uniform points with a guard band near the interval endpoints.
std::vector<double> verification_grid(Interval iv, int points = 201,
                                      double guard = 1e-6);

// || h1 (L psi) - E (L psi) || with the mapped spinor differentiated through
// its construction, i.e. a genuine test of the intertwining relation.
ResidualReport intertwining_residual(const TransformFunction& T,
                                     const EigenSpinor& psi, Interval iv,
                                     double tol = 1e-8, int points = 201);

// Residual of gamma phi' + V phi - E phi for a spinor claimed to solve (V,E).
ResidualReport equation_residual(const EigenSpinor& phi, const Potential& V,
                                 Interval iv, double tol = 1e-8,
                                 int points = 201);

// Factorization, both orderings: L+L psi vs (h0-l1)(h0-l2) psi and
// LL+ phi vs (h1-l1)(h1-l2) phi with phi = L psi.
ResidualReport factorization_residual(const TransformFunction& T,
                                      const EigenSpinor& psi, Interval iv,
                                      double tol = 1e-8, int points = 201);

// (E-l1)(E-l2)-normalized norm ratio <L psi | L psi> / (N^2 <psi|psi>).
double norm_preservation(const TransformFunction& T, const EigenSpinor& psi,
                         Interval iv, double quad_tol = 1e-10);

enum class Decay { integrable, non_integrable, indeterminate };

Decay decay_classify(const EigenSpinor& phi, Interval window);

// Superalgebra residuals on a stacked pair (psi over h0, phi = L psi over h1):
// [Q,H] via the intertwining relation and {Q,Q+} - (H-l1)(H-l2) blockwise.
ResidualReport superalgebra_residual(const TransformFunction& T,
                                     const EigenSpinor& psi, Interval iv,
                                     double tol = 1e-8, int points = 201);

} // namespace dirac
