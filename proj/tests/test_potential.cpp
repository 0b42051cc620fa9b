#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirac/potential.hpp"

using namespace dirac;

TEST_CASE("built-in seeds classify themselves") {
    auto free1 = free_mass(1.0);
    CHECK(free1->is_pseudoscalar());
    CHECK(free1->mass() == 1.0);
    CHECK(free1->p()(2.0) == 1.0);
    CHECK(free1->q()(2.0) == 0.0);

    auto osc = dirac_oscillator(2.0);
    CHECK(osc->is_pseudoscalar());
    CHECK(osc->q()(3.0) == doctest::Approx(1.5));
    CHECK(osc->q().deriv(3.0, 1) == doctest::Approx(0.5));
    CHECK(osc->q().deriv(3.0, 2) == doctest::Approx(0.0));

    auto coul = scalar_coulomb(1.0, 1.0);
    CHECK(coul->is_scalar());
    CHECK(coul->rep() == ScalarRep::hat);
    CHECK(coul->q()(2.0) == doctest::Approx(1.0 - 0.5));
    CHECK(coul->q().deriv(2.0, 1) == doctest::Approx(0.25));
    CHECK_THROWS_AS(coul->q()(0.0), OutOfDomain);

    auto rad0 = radial_free(1.0, 0.0);
    CHECK(rad0->is_scalar());
    CHECK(rad0->rep() == ScalarRep::sigma3);

    auto rad1 = radial_free(1.0, 1.0);
    CHECK(rad1->is_pseudoscalar());
    CHECK(rad1->q()(0.5) == doctest::Approx(2.0));
}

TEST_CASE("class probe on hand-built potentials") {
    auto gen = make_canonical(
        ScalarField([](double x, int k) { return k == 0 ? x : k == 1 ? 1.0 : 0.0; }, 4),
        ScalarField(0.3));
    CHECK(gen->class_tag() == PotentialClass::general);

    auto sc = make_canonical(ScalarField(0.7), ScalarField(0.0));
    CHECK(sc->is_scalar());
}

TEST_CASE("potential matrix evaluation") {
    auto osc = dirac_oscillator(2.0);
    const Mat2 v = osc->at(1.0);
    CHECK(v.a11 == doctest::Approx(2.0));
    CHECK(v.a12 == doctest::Approx(0.5));
    CHECK(v.a21 == doctest::Approx(0.5));
    CHECK(v.a22 == doctest::Approx(-2.0));
    const Mat2 v1 = osc->at(1.0, 1);
    CHECK(v1.a11 == 0.0);
    CHECK(v1.a12 == doctest::Approx(0.5));
}

TEST_CASE("seed catalog parser") {
    auto v = seed_catalog("free_mass:m=2");
    CHECK(v->mass() == 2.0);
    auto c = seed_catalog("scalar_coulomb:m=1,alpha=0.5");
    CHECK(c->q()(4.0) == doctest::Approx(1.0 - 0.125));
    auto r = seed_catalog("radial_free:m=1,k=1");
    CHECK(r->q()(2.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(seed_catalog("harmonic:m=1"), UnknownSeed);
    CHECK_THROWS_AS(seed_catalog("free_mass:mass=1"), UnknownSeed);
}

TEST_CASE("working intervals") {
    auto free1 = free_mass(1.0);
    CHECK(free1->working_interval().lo == -8.0);
    CHECK(free1->working_interval().hi == 8.0);
    auto coul = scalar_coulomb(1.0, 1.0, 1e-6);
    CHECK(coul->working_interval().lo > 0.0);
    CHECK(coul->working_interval().hi > coul->working_interval().lo);
}
