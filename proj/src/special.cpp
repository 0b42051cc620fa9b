#include "dirac/special.hpp"

#include "dirac/errors.hpp"

namespace dirac {

double kn_poly(int n, double x) {
    if (n < 0) throw Error("kn_poly: n must be nonnegative");
    if (n == 0) return 1.0;
    double km1 = 1.0, k = x;
    for (int j = 1; j < n; ++j) {
        double next = x * k + j * km1;
        km1 = k;
        k = next;
    }
    return k;
}

double hermite_he(int n, double x) {
    if (n < 0) throw Error("hermite_he: n must be nonnegative");
    if (n == 0) return 1.0;
    double hm1 = 1.0, h = x;
    for (int j = 1; j < n; ++j) {
        double next = x * h - j * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

double laguerre(int n, double a, double x) {
    if (n < 0) throw Error("laguerre: n must be nonnegative");
    if (n == 0) return 1.0;
    double lm1 = 1.0, l = 1.0 + a - x;
    for (int j = 1; j < n; ++j) {
        double next = ((2.0 * j + 1.0 + a - x) * l - (j + a) * lm1) / (j + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

} // namespace dirac
