#pragma once

namespace dirac {

// K_n(x) = (-i)^n He_n(ix); real recurrence K_{n+1} = x K_n + n K_{n-1}.
// Nodeless for even n; K_n' = n K_{n-1}.
double kn_poly(int n, double x);

// Probabilists' Hermite polynomial He_n(x).
double hermite_he(int n, double x);

// Generalized Laguerre L_n^a(x) by the three-term recurrence.
double laguerre(int n, double a, double x);

} // namespace dirac
