#pragma once

#include <functional>
#include <memory>

#include "dirac/potential.hpp"
#include "dirac/spinor.hpp"

namespace dirac {

// One Darboux step generator: U = (u1, u2), Lambda = diag(lambda1, lambda2),
// gamma U_x + V0 U = U Lambda. Immutable; the transformed potential is built
// eagerly (closures only, no grid work).
class TransformFunction {
public:
    TransformFunction(EigenSpinor u1, EigenSpinor u2, bool allow_singular);

    const EigenSpinor& u1() const { return u1_; }
    const EigenSpinor& u2() const { return u2_; }
    double lambda1() const { return u1_.E(); }
    double lambda2() const { return u2_.E(); }
    const PotentialPtr& parent() const { return parent_; }
    const PotentialPtr& transformed() const { return transformed_; }

    Mat2 matrix(double x) const;
    JetMat2 matrix_jets(double x, int order) const;
    // Omega-tilde = U_x U^{-1}
    Mat2 omega(double x) const;
    JetMat2 omega_jets(double x, int order) const;

private:
    EigenSpinor u1_, u2_;
    PotentialPtr parent_;
    PotentialPtr transformed_;
};

TransformFunction build_transform(const EigenSpinor& u1, const EigenSpinor& u2,
                                  bool allow_singular = false);

PotentialPtr transformed_potential(const TransformFunction& T);

// V1 computed through V0 + Omega gamma - gamma Omega with Omega = -U_x U^{-1};
// the cross-check route for tests (the potential provider uses the
// determinant form -V0 + (lambda1-lambda2) Dtilde / det U).
Mat2 transformed_potential_omega_route(const TransformFunction& T, double x);

// phi = L psi = psi_x - U_x U^{-1} psi, an eigenspinor of the transformed
// potential at the same E (zero when psi lies in span(u1, u2)).
EigenSpinor apply_forward(const TransformFunction& T, const EigenSpinor& psi);

// Algebraic route phi = gamma (U Lambda U^{-1} - E) psi; must agree with
// apply_forward pointwise.
Vec2 apply_forward_algebraic(const TransformFunction& T, const EigenSpinor& psi,
                             double x);

// V = (U^t)^{-1} over the transformed potential, same Lambda.
TransformFunction partner_matrix(const TransformFunction& T);

// L+ phi = -phi_x - (U_x U^{-1})^t phi, back to the parent potential.
EigenSpinor apply_adjoint(const TransformFunction& T, const EigenSpinor& phi);

enum class PSBranch { upper, lower };

// Result of a pseudoscalar-preserving step. Carries the data the SUSY
// diagram check needs: q0, q1 and the log-derivative seeds.
struct PseudoscalarStep {
    PotentialPtr V0;
    PotentialPtr V1;
    double mass_in = 0.0;
    double lambda2 = 0.0;
    double mass_out = 0.0;
    PSBranch branch = PSBranch::upper;
    EigenSpinor u2;      // the lambda2 seed
    // jets of the component whose log-derivative is +-q1
    // (u22 for the upper branch, u12 for the lower one)
    std::function<Jet(double, int)> log_seed;

    EigenSpinor map(const EigenSpinor& psi) const;
};

// branch upper: u1 = (u11, 0) at lambda1 = +m (u11 implied by q0), the
// transformed mass is -lambda2 and q1 = (ln u22)'. branch lower: u1 = (0, u21)
// at -m, mass +lambda2, q1 = -(ln u12)'.
PseudoscalarStep pseudoscalar_step(const PotentialPtr& V, const EigenSpinor& u2,
                                   PSBranch branch);
// Variant with an explicit zero-component seed; checks the branch shape.
PseudoscalarStep pseudoscalar_step(const PotentialPtr& V, const EigenSpinor& u1,
                                   const EigenSpinor& u2, PSBranch branch);

// Scalar-preserving step built from one seed at lambda (the partner at
// -lambda is sigma-symmetric, which kills d2 identically).
struct ScalarStep {
    PotentialPtr V0;
    PotentialPtr V1;
    double mass = 0.0;
    double lambda = 0.0;
    // jets of the nodeless hat-representation combinations
    std::function<Jet(double, int)> uhat11;
    std::function<Jet(double, int)> uhat21;

    EigenSpinor map(const EigenSpinor& psi) const;
    // columns of (U-hat^t)^{-1}: index 0 at +lambda, 1 at -lambda
    EigenSpinor partner_column(int i) const;
};

ScalarStep scalar_step(const PotentialPtr& V, const EigenSpinor& u1);

} // namespace dirac
