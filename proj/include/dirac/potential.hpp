#pragma once

#include <cmath>
#include <memory>
#include <string>

#include "dirac/mat2.hpp"
#include "dirac/scalar_field.hpp"

namespace dirac {

enum class PotentialClass { general, pseudoscalar, scalar, scalar_pseudoscalar };

// Representation of a scalar potential: m+S multiplying sigma3 (canonical) or
// sigma1 (the "hat" form reached by conjugation with (1+gamma)/sqrt(2)).
enum class ScalarRep { sigma3, hat };

// Canonical-form Dirac potential V(x) = p(x) sigma3 + q(x) sigma1.
class Potential {
public:
    Potential(ScalarField p, ScalarField q, Interval working,
              double mass = std::numeric_limits<double>::quiet_NaN(),
              ScalarRep rep = ScalarRep::sigma3);

    const ScalarField& p() const { return p_; }
    const ScalarField& q() const { return q_; }

    // p^(k)(x) sigma3 + q^(k)(x) sigma1
    Mat2 at(double x, int k = 0) const;

    PotentialClass class_tag() const;
    std::string class_name() const;
    bool is_pseudoscalar() const { return pseudoscalar_; }
    bool is_scalar() const { return scalar_; }
    double mass() const { return mass_; }
    ScalarRep rep() const { return rep_; }

    int max_deriv_order() const { return max_order_; }
    const Interval& domain() const { return domain_; }
    const Interval& working_interval() const { return working_; }

private:
    ScalarField p_, q_;
    Interval working_;
    Interval domain_;
    double mass_;
    ScalarRep rep_;
    int max_order_;
    bool pseudoscalar_ = false;
    bool scalar_ = false;
};

using PotentialPtr = std::shared_ptr<const Potential>;

// Wraps p, q into a Potential with auto-detected class tag (33-point probe).
PotentialPtr make_canonical(ScalarField p, ScalarField q,
                            Interval working = {-8.0, 8.0});

// Built-in seeds.
PotentialPtr free_mass(double m);
PotentialPtr dirac_oscillator(double m);
PotentialPtr scalar_coulomb(double m, double alpha, double r_min = 1e-6);
PotentialPtr radial_free(double m, double k, double r_min = 1e-6);

// Resolves e.g. "free_mass:m=1" or "scalar_coulomb:m=1,alpha=1".
PotentialPtr seed_catalog(const std::string& spec);

Mat2 potential_at(const Potential& V, double x, int k);

} // namespace dirac
