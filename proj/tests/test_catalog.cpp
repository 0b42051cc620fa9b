#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirac/catalog.hpp"

using namespace dirac;

TEST_CASE("catalog enumerates fourteen examples") {
    CHECK(example_names().size() == 14);
    CHECK(example_names().front() == "ex1");
    CHECK(example_names().back() == "ex14");
    CHECK_THROWS_AS(example("ex15"), UnknownExample);
}

TEST_CASE("every example reproduces its closed form") {
    for (const std::string& name : example_names()) {
        ExampleBundle b = example(name);
        const ResidualReport rep = check_bundle(b);
        INFO(rep.line());
        CHECK(rep.pass());
    }
}

TEST_CASE("radial variants reproduce their closed forms") {
    CHECK(check_example("ex13", 201, {{"variant", 1}}).pass());
    CHECK(check_example("ex13", 201, {{"variant", 2}}).pass());
    CHECK(check_example("ex14", 201, {{"variant", 1}}).pass());
}

TEST_CASE("mapped solutions solve the transformed equation") {
    for (const std::string& name : example_names()) {
        ExampleBundle b = example(name);
        for (const EigenSpinor& s : b.mapped) {
            const ResidualReport rep =
                equation_residual(s, *b.computed, b.interval, b.tol);
            INFO(name << " " << rep.line());
            CHECK(rep.pass());
        }
    }
}

TEST_CASE("intertwining holds for every example with a one-step transform") {
    for (const std::string& name : example_names()) {
        ExampleBundle b = example(name);
        if (!b.transform) continue;
        for (const EigenSpinor& s : b.probes) {
            const ResidualReport rep =
                intertwining_residual(*b.transform, s, b.interval, b.tol);
            INFO(name << " " << rep.line());
            CHECK(rep.pass());
        }
    }
}

TEST_CASE("parameter guards") {
    CHECK_THROWS_AS(example("ex2", {{"eps1", 0.6}}), ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex3", {{"eps1", 0.5}}), ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex4", {{"B", 0.9}}), ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex6", {{"n", 2}}), ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex6", {{"n", 5}}), ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex7", {{"n", 3}}), ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex8", {{"B", 1.0}}), ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex10", {{"lam1", 0.7}}),
                    ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex11", {{"alpha", -1.0}}),
                    ParameterOutOfRegularRange);
    CHECK_THROWS_AS(example("ex14", {{"c", -1.0}}), ParameterOutOfRegularRange);
}

TEST_CASE("parameter overrides reach the bundle") {
    ExampleBundle b = example("ex1", {{"eps", 0.4}});
    CHECK(b.computed->p()(0.3) == doctest::Approx(-0.4).epsilon(1e-12));
    ExampleBundle b6 = example("ex6", {{"m", 3.0}, {"n", 5}});
    CHECK(b6.computed->p()(0.1) ==
          doctest::Approx(-std::sqrt(9.0 - 5.0)).epsilon(1e-10));
}

TEST_CASE("two-step intermediate seed is the mapped second seed") {
    // the second scalar step's seed must equal L applied to the lambda1
    // solution, including the phase shift in its second component
    ExampleBundle b = example("ex10");
    REQUIRE(b.scalar_steps.size() == 2);
    const double m = 1.0, lam = 0.6, lam1 = 0.58;
    const double k = std::sqrt(m * m - lam * lam);
    const double k1 = std::sqrt(m * m - lam1 * lam1);
    const double a = 0.25 * std::log((m - k) / (m + k));
    const double a1 = 0.25 * std::log((m - k1) / (m + k1));
    EigenSpinor v1 = EigenSpinor::with_jets(
        b.seed, lam1,
        [k1, a1](double x, int n) {
            Jet s0(n), s1(n);
            for (int i = 0; i <= n; ++i) {
                s0[static_cast<std::size_t>(i)] =
                    std::pow(k1, i) * (i % 2 == 0 ? std::sinh(k1 * x)
                                                  : std::cosh(k1 * x));
                s1[static_cast<std::size_t>(i)] =
                    std::pow(k1, i) * (i % 2 == 0 ? std::sinh(k1 * x + 2.0 * a1)
                                                  : std::cosh(k1 * x + 2.0 * a1));
            }
            return JetVec2{s0, s1};
        },
        "second_seed");
    EigenSpinor w1 = b.scalar_steps[0].map(v1);
    for (double x : {-2.0, -0.5, 0.7, 2.3}) {
        const double c1 = k1 * std::cosh(k1 * x) -
                          k * std::tanh(k * x) * std::sinh(k1 * x);
        const double c2 =
            k1 * std::cosh(k1 * x + 2.0 * a1) -
            k * std::tanh(k * x + 2.0 * a) * std::sinh(k1 * x + 2.0 * a1);
        const Vec2 v = w1.value(x);
        CHECK(v.a == doctest::Approx(c1).epsilon(1e-10));
        CHECK(v.b == doctest::Approx(c2).epsilon(1e-10));
    }
}

TEST_CASE("spectral candidates classify as expected") {
    for (const std::string& name : {"ex1", "ex3", "ex5", "ex9", "ex10"}) {
        ExampleBundle b = example(name);
        for (const SpectralCandidate& c : b.candidates) {
            const Decay d = decay_classify(c.phi, b.decay_window);
            INFO(name << " " << c.label);
            CHECK(d ==
                  (c.integrable ? Decay::integrable : Decay::non_integrable));
        }
        // the advertised bound-state energies are exactly the integrable ones
        for (double level : b.levels) {
            bool found = false;
            for (const SpectralCandidate& c : b.candidates)
                found = found || (c.integrable && std::fabs(c.E - level) < 1e-12);
            INFO(name << " level " << level);
            CHECK(found);
        }
    }
}

TEST_CASE("figure tables") {
    const FigureTable f2 = figure_data(2);
    CHECK(f2.columns == std::vector<std::string>{"x", "B=1.5", "B=1.000005"});
    CHECK(f2.rows.front()[0] == -20.0);
    CHECK(f2.rows.back()[0] == doctest::Approx(20.0));

    const FigureTable f3 = figure_data(3);
    // third series is exactly the seed line x/2
    for (const auto& row : f3.rows)
        CHECK(row[3] == doctest::Approx(0.5 * row[0]));

    const FigureTable f4 = figure_data(4);
    for (const auto& row : f4.rows) {
        CHECK(std::isfinite(row[1]));
        CHECK(std::isfinite(row[2]));
    }

    const FigureTable f5 = figure_data(5);
    CHECK(f5.columns.front() == "r");
    CHECK_THROWS_AS(figure_data(6), UnknownExample);

    // fig 2 value at x=0: bracket gives (k1^2-k^2)/(k1 B) for each curve
    const double k2 = 1.0 - 0.25;
    std::size_t mid = 0;
    while (f2.rows[mid][0] < -1e-12) ++mid;
    const double k12a = 1.0 - 0.45 * 0.45;
    CHECK(f2.rows[mid][1] ==
          doctest::Approx((k12a - k2) / (std::sqrt(k12a) * 1.5)).epsilon(1e-10));
    const double k12b = 1.0 - 0.09;
    CHECK(f2.rows[mid][2] ==
          doctest::Approx((k12b - k2) / (std::sqrt(k12b) * 1.000005))
              .epsilon(1e-10));
}

TEST_CASE("csv emission is deterministic") {
    const std::string a = to_csv(figure_data(3));
    const std::string b = to_csv(figure_data(3));
    CHECK(a == b);
    CHECK(a.substr(0, a.find('\n')) == "x,B=1.0002,B=1.2,q0");
    CHECK(a.find('\r') == std::string::npos);
}

TEST_CASE("figure metrics") {
    const double w20 = fig2_barrier_width(2.0, 0.5, 0.45);
    const double w15 = fig2_barrier_width(1.5, 0.5, 0.45);
    const double w12 = fig2_barrier_width(1.2, 0.5, 0.45);
    const double w1 = fig2_barrier_width(1.000005, 0.5, 0.45);
    CHECK(w20 < w15);
    CHECK(w15 < w12);
    CHECK(w12 < w1);
    CHECK(w15 == doctest::Approx(7.073).epsilon(1e-3));

    CHECK(fig3_deviation(1.0002) > fig3_deviation(1.2));

    const double sep_near = fig4_well_separation(0.58, 0.6);
    const double sep_far = fig4_well_separation(0.2, 0.6);
    CHECK(sep_near > sep_far);
    CHECK(sep_near == doctest::Approx(6.70).epsilon(1e-2));
    CHECK(sep_far == doctest::Approx(3.40).epsilon(1e-2));
}

TEST_CASE("two-soliton spot value") {
    ExampleBundle b = example("ex2");
    const double k2 = 0.75, k12 = 0.91;
    CHECK(b.computed->q()(0.0) ==
          doctest::Approx((k2 - k12) / std::sqrt(k12)).epsilon(1e-10));
}
