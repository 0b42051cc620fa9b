#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirac/catalog.hpp"
#include "dirac/darboux.hpp"
#include "dirac/verify.hpp"

using namespace dirac;

namespace {

TransformFunction one_soliton(double m = 1.0, double eps = 0.5) {
    auto V = free_mass(m);
    return build_transform(free_solution(V, m, "one"),
                           free_solution(V, eps, "sinh"));
}

} // namespace

TEST_CASE("one-soliton potential") {
    TransformFunction T = one_soliton();
    const double k = std::sqrt(0.75);
    CHECK(T.transformed()->p()(1.0) == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(T.transformed()->q()(1.0) ==
          doctest::Approx(k * std::tanh(k)).epsilon(1e-13));
    CHECK(T.transformed()->q()(1.0) == doctest::Approx(0.6056541).epsilon(1e-6));
    CHECK(T.transformed()->is_pseudoscalar());
}

TEST_CASE("determinant route agrees with the omega route") {
    TransformFunction T = one_soliton();
    for (double x : {-4.0, -1.3, 0.2, 2.8}) {
        const Mat2 v = transformed_potential_omega_route(T, x);
        CHECK(v.a11 == doctest::Approx(T.transformed()->p()(x)).epsilon(1e-10));
        CHECK(v.a12 == doctest::Approx(T.transformed()->q()(x)).epsilon(1e-10));
    }
}

TEST_CASE("forward map: derivative vs algebraic route") {
    TransformFunction T = one_soliton();
    EigenSpinor psi = free_solution(T.parent(), 0.3, "cosh");
    EigenSpinor phi = apply_forward(T, psi);
    for (double x : {-2.0, 0.6, 3.1}) {
        const Vec2 alg = apply_forward_algebraic(T, psi, x);
        CHECK((phi.value(x) - alg).norm_inf() <= 1e-10);
        CHECK(dirac_residual(phi, *T.transformed(), 0.3, x).norm_inf() <= 1e-10);
    }
}

TEST_CASE("kernel of L is spanned by the seeds") {
    TransformFunction T = one_soliton();
    EigenSpinor z = apply_forward(T, T.u2());
    for (double x : {-1.5, 0.4, 2.2}) CHECK(z.value(x).norm_inf() <= 1e-10);
}

TEST_CASE("partner matrix columns solve the transformed equation") {
    TransformFunction T = one_soliton();
    TransformFunction P = partner_matrix(T);
    CHECK(P.lambda1() == T.lambda1());
    CHECK(P.lambda2() == T.lambda2());
    for (double x : {-2.4, 0.1, 1.7}) {
        CHECK(dirac_residual(P.u1(), *T.transformed(), T.lambda1(), x)
                  .norm_inf() <= 1e-10);
        CHECK(dirac_residual(P.u2(), *T.transformed(), T.lambda2(), x)
                  .norm_inf() <= 1e-10);
    }
}

TEST_CASE("adjoint undoes the forward map up to the factorization scalar") {
    TransformFunction T = one_soliton();
    EigenSpinor psi = free_solution(T.parent(), 0.3, "cosh");
    EigenSpinor back = apply_adjoint(T, apply_forward(T, psi));
    const double c = (0.3 - T.lambda1()) * (0.3 - T.lambda2());
    for (double x : {-2.0, 0.5, 2.9})
        CHECK((back.value(x) - c * psi.value(x)).norm_inf() <= 1e-9);
}

TEST_CASE("seed validation") {
    auto V = free_mass(1.0);
    CHECK_THROWS_AS(build_transform(free_solution(V, 0.5, "sinh"),
                                    free_solution(V, 0.5, "cosh")),
                    EqualEigenvalues);
    // both seeds vanish in the second slot at x = 0: det has a node
    CHECK_THROWS_AS(build_transform(free_solution(V, 0.5, "sinh"),
                                    free_solution(V, -0.5, "sinh")),
                    DegenerateOnGrid);
    CHECK_NOTHROW(build_transform(free_solution(V, 0.5, "sinh"),
                                  free_solution(V, -0.5, "sinh"), true));
}

TEST_CASE("pseudoscalar step bookkeeping") {
    auto V = free_mass(1.0);
    EigenSpinor u2 = free_solution(V, 0.5, "sinh");
    PseudoscalarStep step = pseudoscalar_step(V, u2, PSBranch::upper);
    CHECK(step.mass_in == 1.0);
    CHECK(step.lambda2 == 0.5);
    CHECK(step.mass_out == doctest::Approx(-0.5));
    CHECK(step.V1->is_pseudoscalar());
    CHECK(step.V1->q()(1.2) ==
          doctest::Approx(std::sqrt(0.75) * std::tanh(std::sqrt(0.75) * 1.2)));

    EigenSpinor phi = step.map(free_solution(V, 0.2, "cosh"));
    for (double x : {-1.0, 0.3, 2.0})
        CHECK(dirac_residual(phi, *step.V1, 0.2, x).norm_inf() <= 1e-10);

    CHECK_THROWS_AS(
        pseudoscalar_step(scalar_coulomb(1.0, 1.0),
                          hat_free_solution(scalar_coulomb(1.0, 1.0), 0.3, 1),
                          PSBranch::upper),
        WrongBranch);
}

TEST_CASE("scalar step over the constant hat potential") {
    auto V = std::make_shared<Potential>(ScalarField(0.0), ScalarField(1.0),
                                         Interval{-12.0, 12.0}, 1.0,
                                         ScalarRep::hat);
    const double lam = 0.6, k = std::sqrt(1.0 - lam * lam);
    const double a = 0.25 * std::log((1.0 - k) / (1.0 + k));
    EigenSpinor u1 = EigenSpinor::with_jets(
        V, lam,
        [k, lam](double x, int n) {
            Jet ep(n), em(n);
            for (int i = 0; i <= n; ++i) {
                ep[static_cast<std::size_t>(i)] = std::pow(k, i) * std::exp(k * x);
                em[static_cast<std::size_t>(i)] = std::pow(-k, i) * std::exp(-k * x);
            }
            return JetVec2{ep + em, (ep * (1.0 - k) + em * (1.0 + k)) * (1.0 / lam)};
        },
        "scalar_seed");
    ScalarStep step = scalar_step(V, u1);
    CHECK(step.V1->is_scalar());
    CHECK(step.V1->p()(0.7) == doctest::Approx(0.0));
    CHECK(step.V1->q()(0.7) ==
          doctest::Approx(1.0 - 2.0 * k * k /
                                    (1.0 + lam * std::cosh(2.0 * k * 0.7 +
                                                           2.0 * a)))
              .epsilon(1e-10));
    for (int i : {0, 1})
        for (double x : {-1.5, 0.2, 2.4})
            CHECK(dirac_residual(step.partner_column(i), *step.V1,
                                 i == 0 ? lam : -lam, x)
                      .norm_inf() <= 1e-9);
    auto osc = dirac_oscillator(2.0);
    CHECK_THROWS_AS(scalar_step(osc, free_solution(osc, 2.0, "one")),
                    WrongBranch);
}

TEST_CASE("factorization and superalgebra residuals") {
    TransformFunction T = one_soliton();
    EigenSpinor psi = free_solution(T.parent(), 0.25, "sinh");
    CHECK(factorization_residual(T, psi, {-6.0, 6.0}).pass());
    CHECK(superalgebra_residual(T, psi, {-6.0, 6.0}).pass());
}

TEST_CASE("omega satisfies the antisymmetry relation") {
    // U_x U^-1 - (U_x U^-1)^t = -(lambda1+lambda2) gamma
    TransformFunction T = one_soliton();
    const double s = T.lambda1() + T.lambda2();
    for (double x : {-3.2, -0.8, 0.9, 2.6}) {
        const Mat2 om = T.omega(x);
        const Mat2 lhs = om - om.transpose() + s * GAMMA;
        CHECK(lhs.norm_max() <= 1e-8);
    }
}
