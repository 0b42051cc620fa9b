// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "dirac/catalog.hpp"
#include "dirac/reduction.hpp"

using namespace dirac;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok) {
    std::printf("criterion %2d: %-58s %s\n", n, what, ok ? "pass" : "fail");
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool one_soliton_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    ExampleBundle b = example("ex1");
    const double k = std::sqrt(0.75);
    double worst_q = 0.0, worst_p = 0.0;
    for (int i = 0; i < 401; ++i) {
        const double x = -10.0 + 20.0 * i / 400.0;
        worst_q = std::max(worst_q, std::fabs(b.computed->q()(x) -
                                              k * std::tanh(k * x)));
        worst_p = std::max(worst_p, std::fabs(b.computed->p()(x) + 0.5));
    }
    return worst_q <= 1e-10 && worst_p <= 1e-12 && seconds_since(t0) < 1.0;
}

bool chain_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const char* name : {"ex2", "ex3"}) {
        ExampleBundle b = example(name);
        SequentialChain seq = sequential_chain(*b.chain);
        for (double x : verification_grid(b.interval, 201)) {
            ok = ok && std::fabs(b.computed->p()(x) -
                                 seq.final_potential->p()(x)) <= 1e-8;
            ok = ok && std::fabs(b.computed->q()(x) -
                                 seq.final_potential->q()(x)) <= 1e-8;
        }
        for (const char* builder : {"cosh", "sinh", "expp"}) {
            EigenSpinor psi = free_solution(b.chain->parent(), 0.2, builder);
            EigenSpinor composed = seq.map(psi);
            for (double x : verification_grid(b.interval, 41))
                ok = ok && (chain_apply(*b.chain, psi, x) - composed.value(x))
                                   .norm_inf() <= 1e-8;
        }
    }
    return ok && seconds_since(t0) < 5.0;
}

bool factorization_identity() {
    bool ok = true;
    for (const char* name : {"ex1", "ex6", "ex9"}) {
        ExampleBundle b = example(name);
        int used = 0;
        for (const EigenSpinor& psi : b.probes) {
            if (psi.parent() != b.transform->parent()) continue;
            ok = ok && factorization_residual(*b.transform, psi, b.interval)
                           .pass();
            ++used;
        }
        ok = ok && used >= 5;
    }
    // the lambda1 = -lambda2 special case: L+L = h0^2 - lambda^2
    ExampleBundle b9 = example("ex9");
    ok = ok && b9.transform->lambda1() == -b9.transform->lambda2();
    return ok;
}

bool intertwining_everywhere() {
    bool ok = true;
    for (const std::string& name : example_names()) {
        ExampleBundle b = example(name);
        if (b.transform) {
            for (const EigenSpinor& psi : b.probes)
                ok = ok && intertwining_residual(*b.transform, psi, b.interval,
                                                 b.tol)
                               .pass();
        }
        for (const EigenSpinor& s : b.mapped)
            ok = ok &&
                 equation_residual(s, *b.computed, b.interval, b.tol).pass();
    }
    // negative control: a 1e-2 perturbation of q must be detected
    ExampleBundle b1 = example("ex1");
    Potential bad(b1.computed->p(),
                  ScalarField([q = b1.computed->q()](double x, int k) {
                      return q.deriv(x, k) + (k == 0 ? 1e-2 : 0.0);
                  }, b1.computed->q().max_order()),
                  b1.computed->working_interval(), b1.computed->mass());
    EigenSpinor phi = apply_forward(*b1.transform, b1.probes.front());
    ok = ok &&
         equation_residual(phi, bad, b1.interval).max_residual >= 1e-3;
    return ok;
}

bool wronskian_constancy() {
    std::vector<std::pair<EigenSpinor, EigenSpinor>> pairs;
    auto V = free_mass(1.0);
    pairs.emplace_back(free_solution(V, 0.3, "cosh"),
                       free_solution(V, 0.3, "sinh"));
    pairs.emplace_back(free_solution(V, 0.3, "expp"),
                       free_solution(V, 0.3, "expm"));
    pairs.emplace_back(free_solution(V, -0.2, "cosh"),
                       free_solution(V, -0.2, "sinh"));
    pairs.emplace_back(free_solution(V, 0.45, "coshB:2"),
                       free_solution(V, 0.45, "sinh"));
    pairs.emplace_back(free_solution(V, 0.1, "cosh"),
                       free_solution(V, 0.1, "expm"));
    ExampleBundle b9 = example("ex9");
    pairs.emplace_back(hat_free_solution(b9.seed, 0.3, +1),
                       hat_free_solution(b9.seed, 0.3, -1));
    pairs.emplace_back(hat_free_solution(b9.seed, -0.45, +1),
                       hat_free_solution(b9.seed, -0.45, -1));
    pairs.emplace_back(hat_free_solution(b9.seed, 0.7, +1),
                       hat_free_solution(b9.seed, 0.7, -1));
    ExampleBundle b12 = example("ex12");
    pairs.emplace_back(b12.probes[0], b12.probes[1]); // radial pair at 0.4
    ExampleBundle b13 = example("ex13");
    pairs.emplace_back(b13.probes[0], b13.probes[1]);

    bool ok = pairs.size() == 10;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Interval iv = i < 8 ? Interval{-6.0, 6.0} : Interval{0.3, 10.0};
        std::vector<double> w;
        for (double x : verification_grid(iv, 100))
            w.push_back(wronskian(pairs[i].first, pairs[i].second, x));
        double mean = 0.0;
        for (double v : w) mean += v;
        mean /= static_cast<double>(w.size());
        double var = 0.0;
        for (double v : w) var += (v - mean) * (v - mean);
        var /= static_cast<double>(w.size());
        ok = ok && std::sqrt(var) / std::fabs(mean) <= 1e-10;
    }
    return ok;
}

bool norm_identity() {
    ExampleBundle b = example("ex2");
    const double eps = 0.5, k = std::sqrt(1.0 - eps * eps);
    EigenSpinor bound = EigenSpinor::with_jets(
        b.transform->parent(), eps,
        [k](double x, int n) {
            Jet ch(n);
            for (int i = 0; i <= n; ++i)
                ch[static_cast<std::size_t>(i)] =
                    std::pow(k, i) *
                    (i % 2 == 0 ? std::cosh(k * x) : std::sinh(k * x));
            return JetVec2{Jet::constant(0.0, n), ch.reciprocal()};
        },
        "one_soliton_bound");
    const double ratio = norm_preservation(*b.transform, bound, {-20.0, 20.0});
    return std::fabs(ratio - 1.0) <= 1e-6;
}

bool susy_diagram() {
    bool ok = true;
    for (const char* name : {"ex1", "ex6"}) {
        ExampleBundle b = example(name);
        const SusyDiagramReport rep = susy_diagram_check(*b.ps_step, b.interval);
        ok = ok && rep.pass() && rep.max_coincidence <= 1e-10;
    }
    return ok;
}

bool closed_form_catalog() {
    bool ok = true;
    for (const std::string& name : example_names())
        ok = ok && check_example(name).pass();
    auto guarded = [](const char* name, Params p) {
        try {
            example(name, p);
        } catch (const ParameterOutOfRegularRange&) {
            return true;
        }
        return false;
    };
    ok = ok && guarded("ex2", {{"eps1", 0.6}}); // k1 <= k
    ok = ok && guarded("ex4", {{"B", 0.9}});
    ok = ok && guarded("ex8", {{"B", 1.0}});
    ok = ok && guarded("ex6", {{"n", 2}});
    ok = ok && guarded("ex7", {{"n", 3}});
    return ok;
}

bool spectral_bookkeeping() {
    bool ok = true;
    for (const char* name : {"ex1", "ex3", "ex5", "ex10"}) {
        ExampleBundle b = example(name);
        std::set<double> expected(b.levels.begin(), b.levels.end());
        std::set<double> found;
        for (const SpectralCandidate& c : b.candidates) {
            const Decay d = decay_classify(c.phi, b.decay_window);
            ok = ok && d == (c.integrable ? Decay::integrable
                                          : Decay::non_integrable);
            if (d == Decay::integrable) found.insert(c.E);
        }
        ok = ok && found == expected;
    }
    return ok;
}

bool figure_properties() {
    const auto t0 = std::chrono::steady_clock::now();
    double prev = 0.0;
    bool ok = true;
    for (double B : {2.0, 1.5, 1.2, 1.05, 1.000005}) {
        const double w = fig2_barrier_width(B, 0.5, 0.45);
        ok = ok && w > prev;
        prev = w;
    }
    ok = ok && fig3_deviation(1.0002) > fig3_deviation(1.2);
    // smaller lambda - lambda1 gap pushes the two wells further apart
    ok = ok && fig4_well_separation(0.58, 0.6) > fig4_well_separation(0.2, 0.6);
    for (int n : {2, 3, 4, 5})
        ok = ok && to_csv(figure_data(n)) == to_csv(figure_data(n));
    return ok && seconds_since(t0) < 10.0;
}

bool identity_suites() {
    bool ok = true;
    // trace identity and Sylvester are exercised exhaustively in test_core;
    // here: the operator identities on 50 random points each.
    ExampleBundle b2 = example("ex2");
    const std::vector<EigenSpinor>& s = b2.chain->spinors();
    EigenSpinor psi = free_solution(b2.seed, 0.35, "cosh");
    std::vector<EigenSpinor> with_psi{s[0], s[1], s[2], psi};
    unsigned state = 12345;
    auto next_x = [&state]() {
        state = state * 1664525u + 1013904223u;
        return -3.0 + 6.0 * (state % 10000u) / 10000.0;
    };
    for (int i = 0; i < 50; ++i) {
        const double x = next_x();
        // mixed-Wronskian differentiation identity
        const Jet w = block_wronskian_jet(s, x, 1);
        const Jet wpsi = block_wronskian_jet(with_psi, x, 1);
        const double lhs = w.value() * wpsi[1] - w[1] * wpsi.value();
        const auto [w1f, w2f] = odd_wronskians({s[0], s[1]}, s[2], x);
        const auto [w1p, w2p] = odd_wronskians(s, psi, x);
        double scale = std::max(1.0, std::fabs(lhs));
        ok = ok && std::fabs(lhs - (w1f * w2p - w2f * w1p)) / scale <= 1e-9;
        // Jacobi-type identity
        const auto [w1g, w2g] = odd_wronskians({s[0], s[1]}, s[3], x);
        const double jl = w1f * w2g - w1g * w2f;
        const double jr =
            block_wronskian({s[0], s[1]}, x) * block_wronskian(s, x);
        scale = std::max({1.0, std::fabs(jl), std::fabs(jr)});
        ok = ok && std::fabs(jl - jr) / scale <= 1e-9;
        // antisymmetry of U_x U^-1
        const Mat2 om = b2.transform->omega(x);
        const Mat2 anti = om - om.transpose() +
                          (b2.transform->lambda1() + b2.transform->lambda2()) *
                              GAMMA;
        ok = ok && anti.norm_max() <= 1e-8;
        // gamma trace identity on a matrix sampled from the run
        const Mat2 a{om.a11 + x, om.a12, om.a21 - x, om.a22};
        const Mat2 tr = GAMMA * a + a.transpose() * GAMMA - a.trace() * GAMMA;
        ok = ok && tr.norm_max() <= 1e-12;
    }
    return ok;
}

} // namespace

int main() {
    report(1, "one-soliton reproduction on [-10,10] x 401",
           one_soliton_reproduction());
    report(2, "chain determinants vs sequential composition",
           chain_equivalence());
    report(3, "factorization theorem, 5 spinors x {ex1, ex6, ex9}",
           factorization_identity());
    report(4, "intertwining across the catalog + negative control",
           intertwining_everywhere());
    report(5, "Wronskian constancy for 10 same-energy pairs",
           wronskian_constancy());
    report(6, "norm preservation of the mapped bound state", norm_identity());
    report(7, "SUSY diagram identities for ex1 and ex6", susy_diagram());
    report(8, "closed-form catalog ex1-ex14 + range guards",
           closed_form_catalog());
    report(9, "spectral bookkeeping via decay classification",
           spectral_bookkeeping());
    report(10, "figure properties, deterministic CSV, < 10 s",
           figure_properties());
    report(11, "determinant and operator identity suites", identity_suites());
    return failures;
}
