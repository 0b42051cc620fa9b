#pragma once

#include "dirac/darboux.hpp"
#include "dirac/scalar_field.hpp"

namespace dirac {

// Pair of Schrodinger potentials governing the two spinor components, with
// the energy shift rule eps = E^2 - shift.
struct SchrodingerPair {
    ScalarField U_plus;
    ScalarField U_minus;
    double shift = 0.0;
};

// U_pm = q^2 +- q'; first components obey U_plus, second ones U_minus.
SchrodingerPair pseudoscalar_to_schrodinger(const ScalarField& q, double m);

// U_pm = (m+S)^2 +- S'.
SchrodingerPair scalar_to_schrodinger(const ScalarField& S, double m);

struct SusyDiagramReport {
    // coincidence of the shifted transformed potential with a seed partner:
    // upper branch: U1~(+) == U0(-); lower branch: U1~(-) == U0(+)
    double max_coincidence = 0.0;
    // delta U(-) vs -2 (ln u22)'' (upper) / -2 (ln u21-type)'' analog (lower)
    double max_delta_minus = 0.0;
    // delta U(+) vs -2 (ln u11)'' (upper) / -2 (ln u12)'' (lower)
    double max_delta_plus = 0.0;
    double energy_shift = 0.0; // lambda2^2 - m^2
    double tol_coincidence = 1e-10;
    double tol_delta = 1e-8;

    bool pass() const {
        return max_coincidence <= tol_coincidence &&
               max_delta_minus <= tol_delta && max_delta_plus <= tol_delta;
    }
};

// Checks the commutative diagram identities of a pseudoscalar step on a
// uniform grid over the given interval.
SusyDiagramReport susy_diagram_check(const PseudoscalarStep& step,
                                     Interval interval, int points = 201);

} // namespace dirac
