#include "dirac/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "dirac/special.hpp"

namespace dirac {

namespace {

double par(const Params& o, const char* key, double dflt) {
    auto it = o.find(key);
    return it == o.end() ? dflt : it->second;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParameterOutOfRegularRange(msg);
}

// ---- elementary jets ----------------------------------------------------

Jet jcosh(double k, double c, double x, int n) {
    Jet j(n);
    const double ch = std::cosh(k * x + c), sh = std::sinh(k * x + c);
    double kp = 1.0;
    for (int i = 0; i <= n; ++i) {
        j[static_cast<std::size_t>(i)] = kp * (i % 2 == 0 ? ch : sh);
        kp *= k;
    }
    return j;
}

Jet jsinh(double k, double c, double x, int n) {
    Jet j(n);
    const double ch = std::cosh(k * x + c), sh = std::sinh(k * x + c);
    double kp = 1.0;
    for (int i = 0; i <= n; ++i) {
        j[static_cast<std::size_t>(i)] = kp * (i % 2 == 0 ? sh : ch);
        kp *= k;
    }
    return j;
}

Jet jexp(double k, double x, int n) {
    Jet j(n);
    const double e = std::exp(k * x);
    double kp = 1.0;
    for (int i = 0; i <= n; ++i) {
        j[static_cast<std::size_t>(i)] = kp * e;
        kp *= k;
    }
    return j;
}

// e^{a x^2}: f' = 2 a x f gives f^(i+1) = 2a (x f^(i) + i f^(i-1)).
Jet jequad(double a, double x, int n) {
    Jet j(n);
    j[0] = std::exp(a * x * x);
    for (int i = 0; i < n; ++i)
        j[static_cast<std::size_t>(i + 1)] =
            2.0 * a *
            (x * j[static_cast<std::size_t>(i)] +
             (i > 0 ? i * j[static_cast<std::size_t>(i - 1)] : 0.0));
    return j;
}

// sqrt(pi/2) (B + erf(x/sqrt 2)); its derivative is e^{-x^2/2}.
Jet jerfq(double B, double x, int n) {
    Jet j(n);
    j[0] = std::sqrt(M_PI / 2.0) * (B + std::erf(x / std::sqrt(2.0)));
    if (n >= 1) {
        Jet g = jequad(-0.5, x, n - 1);
        for (int i = 1; i <= n; ++i)
            j[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i - 1)];
    }
    return j;
}

// K_n' = n K_{n-1}
Jet jkn(int nn, double x, int order) {
    Jet j(order);
    double coeff = 1.0;
    for (int i = 0; i <= order; ++i) {
        if (nn - i < 0) break;
        j[static_cast<std::size_t>(i)] = coeff * kn_poly(nn - i, x);
        coeff *= nn - i;
    }
    return j;
}

// x^b on x > 0
Jet jpow(double b, double x, int n) {
    Jet j(n);
    double coeff = 1.0, e = b;
    for (int i = 0; i <= n; ++i) {
        j[static_cast<std::size_t>(i)] = coeff * std::pow(x, b - i);
        coeff *= e;
        e -= 1.0;
    }
    return j;
}

// L_n^a(s r) in r; d/dz L_n^a = -L_{n-1}^{a+1}
Jet jlag(int nn, double a, double s, double r, int order) {
    Jet j(order);
    double coeff = 1.0;
    for (int i = 0; i <= order; ++i) {
        if (nn - i < 0) break;
        j[static_cast<std::size_t>(i)] = coeff * laguerre(nn - i, a + i, s * r);
        coeff *= -s;
    }
    return j;
}

double pochhammer(double a, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= a + i;
    return p;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---- small builders -----------------------------------------------------

EigenSpinor js(PotentialPtr V, double E, EigenSpinor::JetFn f,
               std::string label) {
    return EigenSpinor::with_jets(std::move(V), E, std::move(f),
                                  std::move(label));
}

// (-psi1, psi2) at -E; a solution whenever p = 0 (hat-representation scalar).
EigenSpinor hat_flip(const EigenSpinor& s, std::string label) {
    return EigenSpinor::with_jets(
        s.parent(), -s.E(),
        [s](double x, int n) {
            JetVec2 j = s.jets(x, n);
            return JetVec2{-j.a, j.b};
        },
        std::move(label));
}

PotentialPtr hat_constant_mass(double m, Interval working) {
    return std::make_shared<Potential>(ScalarField(0.0), ScalarField(m),
                                       working, m, ScalarRep::hat);
}

std::string elabel(const char* stem, double E) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s@%g", stem, E);
    return buf;
}

ScalarField field_from_jet(std::function<Jet(double, int)> f,
                           int max_order = 6, Interval dom = whole_line) {
    return ScalarField(
        [f = std::move(f)](double x, int k) {
            return f(x, k)[static_cast<std::size_t>(k)];
        },
        max_order, dom);
}

// ---- closed-form scalar combinations shared by bundles and figures ------

// two-step free-line q: (k1^2-k^2) Q / (Q' - k tanh(kx) Q) - k tanh(kx)
double two_step_q(double x, double k, double k1, double B_or_kind,
                  int kind) {
    const double t = k * std::tanh(k * x);
    double Q, Qp;
    if (kind == 0) {
        Q = std::exp(-k1 * x);
        Qp = -k1 * Q;
    } else if (kind == 1) {
        Q = std::sinh(k1 * x);
        Qp = k1 * std::cosh(k1 * x);
    } else {
        Q = std::cosh(k1 * x) + B_or_kind * std::sinh(k1 * x);
        Qp = k1 * (std::sinh(k1 * x) + B_or_kind * std::cosh(k1 * x));
    }
    return (k1 * k1 - k * k) * Q / (Qp - t * Q) - t;
}

double soliton_alpha(double m, double k) {
    return 0.25 * std::log((m - k) / (m + k));
}

// double-well scalar correction of the two-step construction
double soliton2_S2(double x, double lam, double lam1, double m) {
    const double k = std::sqrt(m * m - lam * lam);
    const double k1 = std::sqrt(m * m - lam1 * lam1);
    const double a = soliton_alpha(m, k), a1 = soliton_alpha(m, k1);
    auto term = [&](double sa, double sa1) {
        const double sh = std::sinh(k1 * x + 2.0 * sa1);
        const double ch = std::cosh(k1 * x + 2.0 * sa1);
        const double t = k * std::tanh(k * x + 2.0 * sa);
        return (k1 * k1 - k * k) * sh / (k1 * ch - t * sh);
    };
    return term(a, a1) - term(0.0, 0.0);
}

// Coulomb two-level removal via the Laguerre quotient logs
double coulomb_S2(int kk, double m, double al, double r) {
    auto lev = [&](int n) { return m * std::sqrt(1.0 - al * al / ((n + al) * (n + al))); };
    const double e1 = std::sqrt(m * m - lev(kk) * lev(kk));
    const double e2 = std::sqrt(m * m - lev(kk + 1) * lev(kk + 1));
    const Jet A = jlag(kk, 2 * al + 1, 2 * e2, r, 1);
    const Jet Bj = jlag(kk, 2 * al - 1, 2 * e1, r, 1);
    const Jet C = jlag(kk - 1, 2 * al + 1, 2 * e1, r, 1);
    const Jet D = jlag(kk + 1, 2 * al - 1, 2 * e2, r, 1);
    const Jet AB = A * Bj, CD = C * D;
    const Jet Q1 = AB * (kk / (2 * al + kk + 1)) - CD * ((kk + 1) / (2 * al + kk));
    const Jet Q2 = AB * (1.0 / ((al + kk + 1) * (al + kk + 1))) -
                   CD * (1.0 / ((al + kk) * (al + kk)));
    return -al / r + Q2.log_derivative().value() - Q1.log_derivative().value();
}

// ---- example builders ---------------------------------------------------

ExampleBundle ex1_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), eps = par(o, "eps", 0.5);
    require(m > 0.0 && eps > 0.0 && eps < m, "need 0 < eps < m");
    const double k = std::sqrt(m * m - eps * eps);

    ExampleBundle b;
    b.name = "ex1";
    b.title = "one-soliton twist of the free particle";
    b.seed = free_mass(m);
    b.interval = {-10.0, 10.0};
    b.decay_window = {-10.0, 10.0};

    EigenSpinor u1 = free_solution(b.seed, m, "one");
    EigenSpinor u2 = free_solution(b.seed, eps, "sinh");
    b.transform = std::make_shared<TransformFunction>(build_transform(u1, u2));
    b.computed = b.transform->transformed();
    b.ps_step = std::make_shared<PseudoscalarStep>(
        pseudoscalar_step(b.seed, u2, PSBranch::upper));

    b.expected_p = ScalarField(-eps);
    b.expected_q = field_from_jet([k](double x, int n) {
        return (jsinh(k, 0.0, x, n + 1) / jcosh(k, 0.0, x, n + 1)) * k;
    });

    EigenSpinor bound = js(
        b.computed, eps,
        [k](double x, int n) {
            return JetVec2{Jet::constant(0.0, n),
                           jcosh(k, 0.0, x, n).reciprocal()};
        },
        "one_soliton_bound");
    EigenSpinor scat =
        apply_forward(*b.transform, free_solution(b.seed, -eps, "sinh"));
    EigenSpinor grow =
        apply_forward(*b.transform, free_solution(b.seed, 0.3, "cosh"));
    TransformFunction part = partner_matrix(*b.transform);
    b.mapped = {bound, scat};
    b.candidates = {{"bound_state", eps, bound, true},
                    {"cosh_image", 0.3, grow, false},
                    {"partner_col2", eps, part.u2(), true},
                    {"scattering_image", -eps, scat, false}};
    b.levels = {eps};
    b.probes = {free_solution(b.seed, 0.3, "cosh"),
                free_solution(b.seed, -0.2, "sinh"),
                free_solution(b.seed, 0.45 * m / 1.0, "expp"),
                free_solution(b.seed, -0.45, "expm"),
                free_solution(b.seed, 0.1, "coshB:2")};
    return b;
}

// shared construction of the free-line two-step examples
ExampleBundle two_step_bundle(const std::string& name, const Params& o,
                              int kind) {
    const double m = par(o, "m", 1.0), eps = par(o, "eps", 0.5);
    const double eps1 = par(o, "eps1", kind == 0 ? 0.3 : 0.45);
    const double B = par(o, "B", 1.5);
    require(m > 0.0 && eps > 0.0 && eps < m, "need 0 < eps < m");
    require(eps1 > 0.0 && eps1 < m, "need 0 < eps1 < m");
    const double k = std::sqrt(m * m - eps * eps);
    const double k1 = std::sqrt(m * m - eps1 * eps1);
    require(k1 > k, "regularity needs eps1 < eps (so that k1 > k)");
    if (kind == 2) require(B > 1.0, "regularity needs B > 1");

    ExampleBundle b;
    b.name = name;
    b.title = kind == 0   ? "two-step chain, one-sided second seed"
              : kind == 1 ? "two-step chain, odd second seed"
                          : "two-step chain, mixed second seed";
    b.seed = free_mass(m);
    b.interval = {-8.0, 8.0};
    b.decay_window = {-12.0, 12.0};

    EigenSpinor f2 = free_solution(b.seed, -eps, "sinh");
    EigenSpinor g2;
    if (kind == 0) {
        g2 = free_solution(b.seed, eps1, "expm");
    } else if (kind == 1) {
        g2 = free_solution(b.seed, eps1, "cosh");
    } else {
        const double c1 = 1.0 / (eps1 - m);
        g2 = js(
            b.seed, eps1,
            [k1, B, c1](double x, int n) {
                Jet Q = jcosh(k1, 0.0, x, n + 1) + jsinh(k1, 0.0, x, n + 1) * B;
                return JetVec2{Q.derivative() * c1, Q.truncated(n)};
            },
            elabel("mixed_seed", eps1));
    }
    std::vector<ChainStep> steps{
        {free_solution(b.seed, m, "one"), free_solution(b.seed, eps, "sinh"),
         m, eps},
        {f2, g2, -eps, eps1}};
    b.chain = std::make_shared<ChainSpec>(std::move(steps));
    SequentialChain seq = sequential_chain(*b.chain);
    b.transform = std::make_shared<TransformFunction>(seq.transforms[1]);
    b.computed = chain_potential(*b.chain);

    b.expected_p = ScalarField(-eps1);
    b.expected_q = ScalarField(
        [k, k1, B, kind](double x, int j) {
            if (j == 0) return two_step_q(x, k, k1, B, kind);
            const double h = 1e-5;
            return (two_step_q(x + h, k, k1, B, kind) -
                    two_step_q(x - h, k, k1, B, kind)) /
                   (2.0 * h);
        },
        1);

    const PotentialPtr& V1 = b.transform->parent();
    EigenSpinor sech1 = js(
        V1, eps,
        [k](double x, int n) {
            return JetVec2{Jet::constant(0.0, n),
                           jcosh(k, 0.0, x, n).reciprocal()};
        },
        "one_soliton_bound");
    EigenSpinor bound2 = apply_forward(*b.transform, sech1);
    TransformFunction part = partner_matrix(*b.transform);
    b.mapped = {bound2};
    b.candidates = {{"partner_col1", -eps, part.u1(), true},
                    {"partner_col2", eps1, part.u2(), kind != 0},
                    {"mapped_bound", eps, bound2, true}};
    b.levels = kind == 0 ? std::vector<double>{-eps, eps}
                         : std::vector<double>{-eps, eps, eps1};
    const TransformFunction& T1 = seq.transforms[0];
    b.probes = {apply_forward(T1, free_solution(b.seed, 0.2, "cosh")),
                apply_forward(T1, free_solution(b.seed, -0.35, "sinh")),
                apply_forward(T1, free_solution(b.seed, 0.12, "expp"))};
    return b;
}

ExampleBundle ex5_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), eps = par(o, "eps", 0.5);
    require(m > 0.0 && eps > 0.0 && eps < m, "need 0 < eps < m");
    const double k = std::sqrt(m * m - eps * eps);

    ExampleBundle b;
    b.name = "ex5";
    b.title = "single step using both signs of the eigenvalue";
    b.seed = free_mass(m);
    b.interval = {-8.0, 8.0};
    b.decay_window = {-12.0, 12.0};

    EigenSpinor u1 = free_solution(b.seed, -eps, "sinh");
    EigenSpinor u2 = free_solution(b.seed, eps, "expp");
    b.transform = std::make_shared<TransformFunction>(build_transform(u1, u2));
    b.computed = b.transform->transformed();

    auto den = [m, k, eps](double x, int n) {
        return jexp(2.0 * k, x, n) * eps + Jet::constant(m, n);
    };
    b.expected_p = field_from_jet([m, k, den](double x, int n) {
        return Jet::constant(m, n) - den(x, n).reciprocal() * (2.0 * k * k);
    });
    b.expected_q = field_from_jet([k, eps, den](double x, int n) {
        return den(x, n).reciprocal() * (-2.0 * k * eps);
    });

    TransformFunction part = partner_matrix(*b.transform);
    b.mapped = {part.u1(), part.u2()};
    b.candidates = {{"partner_col1", -eps, part.u1(), true},
                    {"partner_col2", eps, part.u2(), false}};
    b.levels = {-eps};
    b.probes = {free_solution(b.seed, 0.3, "cosh"),
                free_solution(b.seed, -0.3, "expm"),
                free_solution(b.seed, 0.2, "coshB:1.5")};
    return b;
}

EigenSpinor oscillator_seed(const PotentialPtr& V, double m, int nn) {
    const double epsn = std::sqrt(m * m - nn);
    const double c1 = 1.0 / (epsn - m);
    return js(
        V, epsn,
        [nn, c1](double x, int n) {
            Jet e = jequad(0.25, x, n);
            return JetVec2{e * jkn(nn, x, n) * c1, e * jkn(nn - 1, x, n)};
        },
        elabel("osc_seed", epsn));
}

ExampleBundle oscillator_bundle(const std::string& name, const Params& o,
                                bool lower) {
    const double m = par(o, "m", 2.0);
    const int nn = static_cast<int>(std::llround(par(o, "n", lower ? 2 : 3)));
    require(nn >= 1, "need n >= 1");
    require(m * m > nn, "need m^2 > n for a real eigenvalue");
    if (!lower) require(nn % 2 == 1, "upper-branch seed needs odd n");
    if (lower) require(nn % 2 == 0, "lower-branch seed needs even n");
    const double epsn = std::sqrt(m * m - nn);

    ExampleBundle b;
    b.name = name;
    b.title = lower ? "oscillator family, lower branch"
                    : "oscillator family, upper branch";
    b.seed = dirac_oscillator(m);
    b.interval = {-6.0, 6.0};
    b.decay_window = {-7.0, 7.0};

    EigenSpinor u2 = oscillator_seed(b.seed, m, nn);
    EigenSpinor u1 =
        lower ? js(
                    b.seed, -m,
                    [](double x, int n) {
                        return JetVec2{Jet::constant(0.0, n),
                                       jequad(-0.25, x, n)};
                    },
                    "gauss_lower")
              : js(
                    b.seed, m,
                    [](double x, int n) {
                        return JetVec2{jequad(0.25, x, n),
                                       Jet::constant(0.0, n)};
                    },
                    "gauss_upper");
    b.transform = std::make_shared<TransformFunction>(build_transform(u1, u2));
    b.ps_step = std::make_shared<PseudoscalarStep>(pseudoscalar_step(
        b.seed, u2, lower ? PSBranch::lower : PSBranch::upper));
    b.computed = b.ps_step->V1;

    b.expected_p = ScalarField(lower ? epsn : -epsn);
    const double sgn = lower ? -1.0 : 1.0;
    const int ktop = lower ? nn : nn - 1;     // numerator polynomial degree
    const int kbot = lower ? nn : nn - 1;     // the nodeless log seed
    (void)ktop;
    b.expected_q = field_from_jet([sgn, lower, nn, kbot](double x, int n) {
        Jet base = Jet::variable(x, n) * 0.5;
        Jet corr = lower ? jkn(nn - 1, x, n + 1) * double(nn) / jkn(kbot, x, n + 1)
                         : jkn(nn - 2, x, n + 1) * double(nn - 1) /
                               jkn(kbot, x, n + 1);
        return (base + corr.truncated(n)) * sgn;
    });

    TransformFunction part = partner_matrix(*b.transform);
    EigenSpinor image1 =
        b.ps_step->map(oscillator_seed(b.seed, m, 1));   // grows like e^{x^2/4}
    b.mapped = {part.u1(), part.u2()};
    b.candidates = {
        {"partner_col1", lower ? -m : m, part.u1(), !lower},
        {"partner_col2", epsn, part.u2(), true},
        {"mapped_growing", std::sqrt(m * m - 1.0), image1, false}};
    b.levels = lower ? std::vector<double>{epsn}
                     : std::vector<double>{epsn, m};
    b.probes = {oscillator_seed(b.seed, m, 1), oscillator_seed(b.seed, m, 2),
                oscillator_seed(b.seed, m, 3),
                js(
                    b.seed, -m,
                    [](double x, int n) {
                        return JetVec2{Jet::constant(0.0, n),
                                       jequad(-0.25, x, n)};
                    },
                    "gauss_lower"),
                js(
                    b.seed, m,
                    [](double x, int n) {
                        return JetVec2{jequad(0.25, x, n),
                                       Jet::constant(0.0, n)};
                    },
                    "gauss_upper")};
    return b;
}

ExampleBundle ex8_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), B = par(o, "B", 1.2);
    require(m >= 1.0, "need m >= 1 for a real eigenvalue");
    require(B > 1.0, "regularity needs B > 1");
    const double lam2 = std::sqrt(m * m - 1.0);

    ExampleBundle b;
    b.name = "ex8";
    b.title = "oscillator family deformed through an error-function seed";
    b.seed = dirac_oscillator(m);
    b.interval = {-6.0, 6.0};
    b.decay_window = {-7.0, 7.0};
    b.tol = 1e-6;

    const double c1 = 1.0 / (lam2 - m);
    EigenSpinor u2 = js(
        b.seed, lam2,
        [B, c1](double x, int n) {
            Jet Q = jerfq(B, x, n);
            Jet ep = jequad(0.25, x, n), em = jequad(-0.25, x, n);
            Jet comp1 = (Jet::variable(x, n) * Q * ep + em) * c1;
            return JetVec2{comp1, Q * ep};
        },
        elabel("erf_seed", lam2));
    EigenSpinor u1 = js(
        b.seed, m,
        [](double x, int n) {
            return JetVec2{jequad(0.25, x, n), Jet::constant(0.0, n)};
        },
        "gauss_upper");
    b.transform = std::make_shared<TransformFunction>(build_transform(u1, u2));
    b.ps_step = std::make_shared<PseudoscalarStep>(
        pseudoscalar_step(b.seed, u2, PSBranch::upper));
    b.computed = b.ps_step->V1;

    b.expected_p = ScalarField(-lam2);
    b.expected_q = field_from_jet([B](double x, int n) {
        return Jet::variable(x, n) * 0.5 +
               jequad(-0.5, x, n) / jerfq(B, x, n);
    });

    EigenSpinor zero_mode = js(
        b.computed, lam2,
        [B](double x, int n) {
            return JetVec2{Jet::constant(0.0, n),
                           jequad(-0.25, x, n) / jerfq(B, x, n)};
        },
        "erf_bound");
    TransformFunction part = partner_matrix(*b.transform);
    b.mapped = {zero_mode, part.u1()};
    b.candidates = {{"erf_bound", lam2, zero_mode, true},
                    {"partner_col1", m, part.u1(), true}};
    b.levels = {lam2, m};
    b.probes = {js(
        b.seed, -m,
        [](double x, int n) {
            return JetVec2{Jet::constant(0.0, n), jequad(-0.25, x, n)};
        },
        "gauss_lower")};
    return b;
}

EigenSpinor scalar_seed(const PotentialPtr& V, double m, double lam) {
    const double k = std::sqrt(m * m - lam * lam);
    return js(
        V, lam,
        [m, k, lam](double x, int n) {
            Jet ep = jexp(k, x, n), em = jexp(-k, x, n);
            return JetVec2{ep + em, (ep * (m - k) + em * (m + k)) * (1.0 / lam)};
        },
        elabel("scalar_seed", lam));
}

ExampleBundle ex9_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), lam = par(o, "lam", 0.6);
    require(m > 0.0 && lam > 0.0 && lam < m, "need 0 < lam < m");
    const double k = std::sqrt(m * m - lam * lam);
    const double a = soliton_alpha(m, k);

    ExampleBundle b;
    b.name = "ex9";
    b.title = "scalar one-step well";
    b.seed = hat_constant_mass(m, {-12.0, 12.0});
    b.interval = {-10.0, 10.0};
    b.decay_window = {-12.0, 12.0};

    EigenSpinor u1 = scalar_seed(b.seed, m, lam);
    ScalarStep step = scalar_step(b.seed, u1);
    b.computed = step.V1;
    b.transform = std::make_shared<TransformFunction>(
        build_transform(u1, hat_flip(u1, elabel("scalar_seed", -lam))));
    b.scalar_steps = {step};

    b.expected_p = ScalarField(0.0);
    b.expected_q = field_from_jet([m, k, lam, a](double x, int n) {
        Jet den = jcosh(2.0 * k, 2.0 * a, x, n) * lam + Jet::constant(m, n);
        return Jet::constant(m, n) - den.reciprocal() * (2.0 * k * k);
    });

    EigenSpinor scat = step.map(hat_free_solution(b.seed, 0.3, +1));
    b.mapped = {step.partner_column(0), step.partner_column(1)};
    b.candidates = {{"partner_col1", lam, step.partner_column(0), true},
                    {"partner_col2", -lam, step.partner_column(1), true},
                    {"mapped_plane", 0.3, scat, false}};
    b.levels = {lam, -lam};
    b.probes = {hat_free_solution(b.seed, 0.3, +1),
                hat_free_solution(b.seed, 0.3, -1),
                hat_free_solution(b.seed, -0.45, +1),
                hat_free_solution(b.seed, -0.45, -1),
                hat_free_solution(b.seed, 0.7, +1)};
    return b;
}

ExampleBundle ex10_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), lam = par(o, "lam", 0.6);
    const double lam1 = par(o, "lam1", 0.58);
    require(m > 0.0 && lam > 0.0 && lam < m, "need 0 < lam < m");
    require(lam1 > 0.0 && lam1 < lam, "regularity needs 0 < lam1 < lam");
    const double k = std::sqrt(m * m - lam * lam);
    const double k1 = std::sqrt(m * m - lam1 * lam1);
    const double a = soliton_alpha(m, k), a1 = soliton_alpha(m, k1);

    ExampleBundle b;
    b.name = "ex10";
    b.title = "scalar two-step double well";
    b.seed = hat_constant_mass(m, {-12.0, 12.0});
    b.interval = {-10.0, 10.0};
    b.decay_window = {-12.0, 12.0};

    EigenSpinor u1 = scalar_seed(b.seed, m, lam);
    ScalarStep step1 = scalar_step(b.seed, u1);
    EigenSpinor v1 = js(
        b.seed, lam1,
        [k1, a1](double x, int n) {
            return JetVec2{jsinh(k1, 0.0, x, n), jsinh(k1, 2.0 * a1, x, n)};
        },
        elabel("scalar_seed2", lam1));
    EigenSpinor w1 = step1.map(v1);
    ScalarStep step2 = scalar_step(step1.V1, w1);
    b.computed = step2.V1;
    b.scalar_steps = {step1, step2};
    b.transform = std::make_shared<TransformFunction>(
        build_transform(w1, hat_flip(w1, elabel("scalar_seed2", -lam1))));

    b.expected_p = ScalarField(0.0);
    b.expected_q = ScalarField(
        [m, lam, lam1](double x, int j) {
            if (j == 0) return m + soliton2_S2(x, lam, lam1, m);
            const double h = 1e-5;
            return (soliton2_S2(x + h, lam, lam1, m) -
                    soliton2_S2(x - h, lam, lam1, m)) /
                   (2.0 * h);
        },
        1);

    b.mapped = {step2.partner_column(0), step2.partner_column(1),
                step2.map(step1.partner_column(0)),
                step2.map(step1.partner_column(1))};
    b.candidates = {
        {"partner2_col1", lam1, step2.partner_column(0), true},
        {"partner2_col2", -lam1, step2.partner_column(1), true},
        {"mapped_well1", lam, step2.map(step1.partner_column(0)), true},
        {"mapped_well2", -lam, step2.map(step1.partner_column(1)), true},
        {"mapped_plane", 0.25, step2.map(step1.map(hat_free_solution(b.seed, 0.25, +1))),
         false}};
    b.levels = {lam, -lam, lam1, -lam1};
    b.probes = {step1.map(hat_free_solution(b.seed, 0.25, +1)),
                step1.map(hat_free_solution(b.seed, -0.4, -1)),
                step1.map(hat_free_solution(b.seed, 0.45, -1))};
    return b;
}

EigenSpinor coulomb_state(const PotentialPtr& V, double m, double al, int n) {
    const double En = m * std::sqrt(1.0 - al * al / ((n + al) * (n + al)));
    const double en = std::sqrt(m * m - En * En);
    const double c1 = -En * factorial(n - 1) / (en * pochhammer(2 * al + 1, n));
    const double c2 = factorial(n) / pochhammer(2 * al, n);
    return js(
        V, En,
        [m, al, n, en, c1, c2](double r, int ord) {
            Jet e = jexp(-en, r, ord);
            Jet comp1 = e * jpow(al + 1.0, r, ord) *
                        jlag(n - 1, 2 * al + 1, 2 * en, r, ord) *
                        (c1 * std::pow(en, al + 1.0));
            Jet comp2 = e * jpow(al, r, ord) *
                        jlag(n, 2 * al - 1, 2 * en, r, ord) *
                        (c2 * std::pow(en, al));
            return JetVec2{comp1, comp2};
        },
        elabel("coulomb_state", En));
}

ExampleBundle ex11_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), al = par(o, "alpha", 1.0);
    require(m > 0.0 && al > 0.0, "need m > 0 and alpha > 0");

    ExampleBundle b;
    b.name = "ex11";
    b.title = "scalar Coulomb potential with two levels removed";
    b.seed = scalar_coulomb(m, al);
    b.interval = {0.3, 12.0};
    // the surviving level decays like r^a e^{-kappa r} with kappa ~ alpha m / 4,
    // so the window must reach well past the turning point r ~ a / kappa
    b.decay_window = {0.3, 80.0};

    EigenSpinor p1 = coulomb_state(b.seed, m, al, 1);
    EigenSpinor p2 = coulomb_state(b.seed, m, al, 2);
    std::vector<ChainStep> steps{
        {p1, hat_flip(p1, "coulomb_state_neg1"), p1.E(), -p1.E()},
        {p2, hat_flip(p2, "coulomb_state_neg2"), p2.E(), -p2.E()}};
    b.chain = std::make_shared<ChainSpec>(std::move(steps));
    b.computed = chain_potential(*b.chain);

    b.expected_p = ScalarField(0.0);
    b.expected_q = field_from_jet([m, al](double r, int n) {
        Jet rv = Jet::variable(r, n);
        Jet num = rv * (4.0 * m * m) - Jet::constant(2.0 * m * (2.0 * al + 3.0), n);
        Jet den = rv * rv * (2.0 * m * m) - rv * (2.0 * m * (2.0 * al + 3.0)) +
                  Jet::constant((al + 2.0) * (2.0 * al + 3.0), n);
        return Jet::constant(m, n) - rv.reciprocal() * (al + 2.0) + num / den;
    });

    EigenSpinor p3 = coulomb_state(b.seed, m, al, 3);
    EigenSpinor img3 = chain_spinor(*b.chain, p3);
    EigenSpinor img3n = chain_spinor(*b.chain, hat_flip(p3, "coulomb_state_neg3"));
    b.mapped = {img3, img3n};
    b.candidates = {{"mapped_n3", p3.E(), img3, true},
                    {"mapped_n3_neg", -p3.E(), img3n, true}};
    b.levels = {p3.E(), -p3.E()};
    return b;
}

// closed-form eigenspinors over m*sigma3 + (1/r)*sigma1
EigenSpinor radial_phi(const PotentialPtr& V, double m, double lam,
                       const char* stem) {
    const double k = std::sqrt(m * m - lam * lam);
    const double c = 1.0 / (lam + m);
    return js(
        V, lam,
        [k, c](double r, int n) {
            Jet sh = jsinh(k, 0.0, r, n), ch = jcosh(k, 0.0, r, n);
            Jet rv = Jet::variable(r, n);
            return JetVec2{sh, (sh * rv.reciprocal() - ch * k) * c};
        },
        elabel(stem, lam));
}

EigenSpinor radial_phi_tilde(const PotentialPtr& V, double m, double lam,
                             const char* stem) {
    const double k = std::sqrt(m * m - lam * lam);
    const double c = 1.0 / (lam + m);
    return js(
        V, lam,
        [k, c](double r, int n) {
            Jet e = jexp(-k, r, n);
            Jet rv = Jet::variable(r, n);
            return JetVec2{e, e * (Jet::constant(k, n) + rv.reciprocal()) * c};
        },
        elabel(stem, lam));
}

ExampleBundle ex12_bundle(const Params& o) {
    const double m = par(o, "m", 1.0);
    require(m > 0.0, "need m > 0");

    ExampleBundle b;
    b.name = "ex12";
    b.title = "radial ladder from the structureless problem";
    b.seed = radial_free(m, 0.0);
    b.interval = {0.3, 12.0};
    b.decay_window = {0.3, 15.0};

    EigenSpinor u1 = js(
        b.seed, m,
        [](double, int n) {
            return JetVec2{Jet::constant(1.0, n), Jet::constant(0.0, n)};
        },
        "flat_plus");
    EigenSpinor u2 = js(
        b.seed, -m,
        [m](double r, int n) {
            return JetVec2{Jet::constant(1.0, n),
                           Jet::variable(r, n) * (-2.0 * m)};
        },
        "linear_minus");
    auto T1 = std::make_shared<TransformFunction>(build_transform(u1, u2));
    const PotentialPtr& V1 = T1->transformed();

    EigenSpinor u1b = js(
        V1, m,
        [](double r, int n) {
            return JetVec2{Jet::variable(r, n), Jet::constant(0.0, n)};
        },
        "ramp_plus");
    EigenSpinor u2b = js(
        V1, -m,
        [m](double r, int n) {
            Jet rv = Jet::variable(r, n);
            return JetVec2{rv * (-3.0), rv * rv * (2.0 * m)};
        },
        "cubic_minus");
    b.transform = std::make_shared<TransformFunction>(build_transform(u1b, u2b));
    b.computed = b.transform->transformed();

    b.expected_p = ScalarField(m);
    b.expected_q = field_from_jet([](double r, int n) {
        return Jet::variable(r, n).reciprocal() * 2.0;
    });

    EigenSpinor decaying = apply_forward(
        *b.transform,
        apply_forward(*T1, js(
                               b.seed, 0.5 * m,
                               [m](double r, int n) {
                                   const double k =
                                       std::sqrt(m * m - 0.25 * m * m);
                                   Jet e = jexp(-k, r, n);
                                   return JetVec2{
                                       e, e * (k / (0.5 * m + m))};
                               },
                               "decaying_seed")));
    EigenSpinor growing = apply_forward(
        *b.transform,
        apply_forward(*T1, js(
                               b.seed, 0.5 * m,
                               [m](double r, int n) {
                                   const double k =
                                       std::sqrt(m * m - 0.25 * m * m);
                                   return JetVec2{
                                       jcosh(k, 0.0, r, n),
                                       jsinh(k, 0.0, r, n) *
                                           (-k / (0.5 * m + m))};
                               },
                               "growing_seed")));
    b.mapped = {decaying};
    b.candidates = {{"mapped_decaying", 0.5 * m, decaying, true},
                    {"mapped_growing", 0.5 * m, growing, false}};
    b.probes = {radial_phi(V1, m, 0.4 * m, "probe_phi"),
                radial_phi_tilde(V1, m, 0.4 * m, "probe_phi_tilde")};
    return b;
}

ExampleBundle ex13_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), lam = par(o, "lam", 0.5);
    const int variant = static_cast<int>(std::llround(par(o, "variant", 0)));
    require(m > 0.0 && lam > 0.0 && lam < m, "need 0 < lam < m");
    require(variant >= 0 && variant <= 2, "variant must be 0, 1 or 2");
    const double k = std::sqrt(m * m - lam * lam);

    ExampleBundle b;
    b.name = "ex13";
    b.title = "radial pseudoscalar potentials";
    b.seed = radial_free(m, 1.0);
    b.interval = {0.3, 12.0};
    b.decay_window = {0.3, 15.0};

    EigenSpinor ramp = js(
        b.seed, m,
        [](double r, int n) {
            return JetVec2{Jet::variable(r, n), Jet::constant(0.0, n)};
        },
        "ramp_plus");
    if (variant == 0 || variant == 1) {
        EigenSpinor u2 = variant == 0
                             ? radial_phi_tilde(b.seed, m, lam, "decaying")
                             : radial_phi(b.seed, m, lam, "oscillating");
        b.transform =
            std::make_shared<TransformFunction>(build_transform(ramp, u2));
        b.ps_step = std::make_shared<PseudoscalarStep>(
            pseudoscalar_step(b.seed, u2, PSBranch::upper));
        b.expected_p = ScalarField(-lam);
        if (variant == 0) {
            b.expected_q = field_from_jet([k](double r, int n) {
                Jet rv = Jet::variable(r, n);
                return -(rv.reciprocal()) -
                       rv * (k * k) / (Jet::constant(1.0, n) + rv * k);
            });
        } else {
            b.expected_q = field_from_jet([k](double r, int n) {
                Jet rv = Jet::variable(r, n);
                Jet ch = jcosh(k, 0.0, r, n), sh = jsinh(k, 0.0, r, n);
                Jet num = ch * rv * (3.0 * k) -
                          sh * (Jet::constant(3.0, n) + rv * rv * (k * k));
                Jet den = rv * (ch * rv * k - sh);
                return rv.reciprocal() * 2.0 - num / den;
            });
        }
    } else {
        EigenSpinor u1 = radial_phi(b.seed, m, lam, "oscillating");
        EigenSpinor u2 = radial_phi(b.seed, m, -lam, "oscillating");
        b.transform =
            std::make_shared<TransformFunction>(build_transform(u1, u2));
        b.expected_p = ScalarField(m);
        b.expected_q = field_from_jet([k](double r, int n) {
            Jet rv = Jet::variable(r, n);
            Jet ch = jcosh(k, 0.0, r, n), sh = jsinh(k, 0.0, r, n);
            Jet num = ch * rv * k + sh.reciprocal() * rv * rv * (k * k) -
                      sh * 2.0;
            Jet den = rv * (ch * rv * k - sh);
            return rv.reciprocal() * 2.0 - num / den;
        });
    }
    b.computed = b.transform->transformed();

    const double lp = 0.3 * m;
    b.probes = {radial_phi(b.seed, m, lp, "probe_phi"),
                radial_phi_tilde(b.seed, m, lp, "probe_phi_tilde")};
    EigenSpinor img =
        apply_forward(*b.transform, radial_phi_tilde(b.seed, m, lp, "probe"));
    b.mapped = {img};
    b.candidates = {{"mapped_decaying", lp, img, true}};
    return b;
}

ExampleBundle ex14_bundle(const Params& o) {
    const double m = par(o, "m", 1.0), lam = par(o, "lam", 0.5);
    const double c = par(o, "c", 1.0);
    const int variant = static_cast<int>(std::llround(par(o, "variant", 0)));
    require(m > 0.0, "need m > 0");
    require(variant == 0 || variant == 1, "variant must be 0 or 1");
    if (variant == 0) require(c > 0.0, "regularity needs c > 0");
    if (variant == 1) require(lam > 0.0 && lam < m, "need 0 < lam < m");
    const double k = std::sqrt(m * m - lam * lam);

    ExampleBundle b;
    b.name = "ex14";
    b.title = "mixed scalar-pseudoscalar radial potentials";
    b.seed = radial_free(m, 1.0);
    b.interval = {0.3, 12.0};
    b.decay_window = {0.3, 15.0};

    if (variant == 0) {
        EigenSpinor u1 = js(
            b.seed, m,
            [m, c](double r, int n) {
                Jet rv = Jet::variable(r, n);
                return JetVec2{rv + Jet::constant(c, n),
                               rv.reciprocal() * (c / (2.0 * m))};
            },
            "mixed_plus");
        EigenSpinor u2 = js(
            b.seed, -m,
            [m](double r, int n) {
                Jet rv = Jet::variable(r, n);
                return JetVec2{rv * (-3.0), rv * rv * (2.0 * m)};
            },
            "cubic_minus");
        b.transform =
            std::make_shared<TransformFunction>(build_transform(u1, u2));
        auto D = [m, c](double r, int n) {
            Jet rv = Jet::variable(r, n);
            return rv * rv * (4.0 * c * m * m) + Jet::constant(3.0 * c, n) +
                   rv * rv * rv * (4.0 * m * m);
        };
        b.expected_p = field_from_jet([m, c, D](double r, int n) {
            Jet rv = Jet::variable(r, n);
            Jet num = rv * rv * (4.0 * c * m * m) -
                      Jet::constant(9.0 * c, n) + rv * rv * rv * (4.0 * m * m);
            return num * m / D(r, n);
        });
        b.expected_q = field_from_jet([m, c, D](double r, int n) {
            Jet rv = Jet::variable(r, n);
            Jet num = rv * rv * (12.0 * c * m * m) -
                      Jet::constant(3.0 * c, n) + rv * rv * rv * (8.0 * m * m);
            return num / (rv * D(r, n));
        });
    } else {
        EigenSpinor u1 = js(
            b.seed, m,
            [m](double r, int n) {
                return JetVec2{Jet::constant(1.0, n),
                               Jet::variable(r, n).reciprocal() *
                                   (1.0 / (2.0 * m))};
            },
            "bounded_plus");
        EigenSpinor u2 = radial_phi(b.seed, m, lam, "oscillating");
        b.transform =
            std::make_shared<TransformFunction>(build_transform(u1, u2));
        auto den = [m, k, lam](double r, int n) {
            Jet rv = Jet::variable(r, n);
            return jcosh(k, 0.0, r, n) * rv * (2.0 * k * m) +
                   jsinh(k, 0.0, r, n) * (lam - m);
        };
        b.expected_p = field_from_jet([m, k, lam, den](double r, int n) {
            Jet rv = Jet::variable(r, n);
            Jet num = jcosh(k, 0.0, r, n) * rv * (2.0 * k * m * lam) +
                      jsinh(k, 0.0, r, n) * (k * k + m * (m - lam));
            return -(num / den(r, n));
        });
        b.expected_q = field_from_jet([m, k, lam, den](double r, int n) {
            Jet rv = Jet::variable(r, n);
            Jet num = jsinh(k, 0.0, r, n) * rv * (2.0 * k * m) -
                      jcosh(k, 0.0, r, n) * (m + lam);
            return num * k / den(r, n);
        });
    }
    b.computed = b.transform->transformed();

    const double lp = 0.35 * m;
    b.probes = {radial_phi(b.seed, m, lp, "probe_phi"),
                radial_phi_tilde(b.seed, m, lp, "probe_phi_tilde")};
    EigenSpinor img =
        apply_forward(*b.transform, radial_phi_tilde(b.seed, m, lp, "probe"));
    b.mapped = {img};
    b.candidates = {{"mapped_decaying", lp, img, true}};
    return b;
}

} // namespace

// ---- public surface -----------------------------------------------------

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{
        "ex1", "ex2",  "ex3",  "ex4",  "ex5",  "ex6",  "ex7",
        "ex8", "ex9", "ex10", "ex11", "ex12", "ex13", "ex14"};
    return names;
}

ExampleBundle example(const std::string& name, const Params& overrides) {
    if (name == "ex1") return ex1_bundle(overrides);
    if (name == "ex2") return two_step_bundle("ex2", overrides, 0);
    if (name == "ex3") return two_step_bundle("ex3", overrides, 1);
    if (name == "ex4") return two_step_bundle("ex4", overrides, 2);
    if (name == "ex5") return ex5_bundle(overrides);
    if (name == "ex6") return oscillator_bundle("ex6", overrides, false);
    if (name == "ex7") return oscillator_bundle("ex7", overrides, true);
    if (name == "ex8") return ex8_bundle(overrides);
    if (name == "ex9") return ex9_bundle(overrides);
    if (name == "ex10") return ex10_bundle(overrides);
    if (name == "ex11") return ex11_bundle(overrides);
    if (name == "ex12") return ex12_bundle(overrides);
    if (name == "ex13") return ex13_bundle(overrides);
    if (name == "ex14") return ex14_bundle(overrides);
    throw UnknownExample("no catalog entry named " + name);
}

ResidualReport check_bundle(const ExampleBundle& b, int grid_points) {
    char gdesc[96];
    std::snprintf(gdesc, sizeof(gdesc), "[%g,%g]x%d", b.interval.lo,
                  b.interval.hi, grid_points);
    ResidualReport rep{"potential", b.name, gdesc, 0.0, b.interval.lo, b.tol};
    for (double x : verification_grid(b.interval, grid_points)) {
        const double rp = std::fabs(b.computed->p()(x) - b.expected_p(x));
        const double rq = std::fabs(b.computed->q()(x) - b.expected_q(x));
        const double r = std::max(rp, rq);
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.argmax = x;
        }
    }
    return rep;
}

ResidualReport check_example(const std::string& name, int grid_points,
                             const Params& overrides) {
    return check_bundle(example(name, overrides), grid_points);
}

EigenSpinor free_solution(const PotentialPtr& V, double E,
                          const std::string& builder) {
    const double m = V->mass();
    if (std::fabs(E + m) < 1e-12)
        throw UnknownSeed("free-line builder needs E != -m");
    const double k2 = m * m - E * E;
    if (k2 < 0.0) throw UnknownSeed("free-line builder needs |E| <= m");
    const double k = std::sqrt(k2);

    std::function<Jet(double, int)> f;
    if (builder == "one") {
        f = [](double, int n) { return Jet::constant(1.0, n); };
    } else if (builder == "cosh") {
        f = [k](double x, int n) { return jcosh(k, 0.0, x, n); };
    } else if (builder == "sinh") {
        f = [k](double x, int n) { return jsinh(k, 0.0, x, n); };
    } else if (builder == "expp") {
        f = [k](double x, int n) { return jexp(k, x, n); };
    } else if (builder == "expm") {
        f = [k](double x, int n) { return jexp(-k, x, n); };
    } else if (builder.rfind("coshB:", 0) == 0) {
        const double B = std::stod(builder.substr(6));
        f = [k, B](double x, int n) {
            return jcosh(k, 0.0, x, n) + jsinh(k, 0.0, x, n) * B;
        };
    } else {
        throw UnknownSeed("unknown free-line builder: " + builder);
    }
    const double c = -1.0 / (E + m);
    return EigenSpinor::with_jets(
        V, E,
        [f, c](double x, int n) {
            Jet fj = f(x, n + 1);
            return JetVec2{fj.truncated(n), fj.derivative() * c};
        },
        elabel(("free:" + builder).c_str(), E));
}

EigenSpinor hat_free_solution(const PotentialPtr& V, double E, int sign) {
    const double m = V->mass();
    if (E == 0.0) throw UnknownSeed("hat-form builder needs E != 0");
    const double k2 = m * m - E * E;
    if (k2 < 0.0) throw UnknownSeed("hat-form builder needs |E| <= m");
    const double sk = (sign >= 0 ? 1.0 : -1.0) * std::sqrt(k2);
    const double c = (m - sk) / E;
    return EigenSpinor::with_jets(
        V, E,
        [sk, c](double x, int n) {
            Jet e = jexp(sk, x, n);
            return JetVec2{e, e * c};
        },
        elabel(sign >= 0 ? "hat_free+" : "hat_free-", E));
}

// ---- figures ------------------------------------------------------------

namespace {

double fig3_curve(double B, double x) {
    const double Q = std::sqrt(M_PI / 2.0) * (B + std::erf(x / std::sqrt(2.0)));
    return 0.5 * x + std::exp(-0.5 * x * x) / Q;
}

std::vector<double> linspace_step(double lo, double hi, double step) {
    std::vector<double> xs;
    const int n = static_cast<int>(std::lround((hi - lo) / step));
    xs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) xs.push_back(lo + i * step);
    return xs;
}

double ks(double m, double e) { return std::sqrt(m * m - e * e); }

} // namespace

FigureTable figure_data(int fig, bool variant) {
    FigureTable t;
    const double m = 1.0;
    if (fig == 2) {
        t.columns = {"x", "B=1.5", "B=1.000005"};
        const double B[2] = {1.5, 1.000005};
        const double curve_eps[2] = {0.45, 0.3};
        for (double x : linspace_step(-20.0, 20.0, 0.05)) {
            std::vector<double> row{x};
            for (int i = 0; i < 2; ++i) {
                const double e = variant ? curve_eps[i] : 0.5;
                const double e1 = variant ? 0.5 : curve_eps[i];
                row.push_back(two_step_q(x, ks(m, e), ks(m, e1), B[i], 2));
            }
            t.rows.push_back(std::move(row));
        }
    } else if (fig == 3) {
        t.columns = {"x", "B=1.0002", "B=1.2", "q0"};
        for (double x : linspace_step(-10.0, 10.0, 0.05))
            t.rows.push_back(
                {x, fig3_curve(1.0002, x), fig3_curve(1.2, x), 0.5 * x});
    } else if (fig == 4) {
        t.columns = {"x", "lambda1=0.58", "lambda1=0.2"};
        for (double x : linspace_step(-15.0, 15.0, 0.05))
            t.rows.push_back({x, m + soliton2_S2(x, 0.6, 0.58, m),
                              m + soliton2_S2(x, 0.6, 0.2, m)});
    } else if (fig == 5) {
        t.columns = {"r", "S0", "S2_k4"};
        for (double r : linspace_step(0.2, 20.0, 0.05))
            t.rows.push_back({r, -1.0 / r, coulomb_S2(4, m, 1.0, r)});
    } else {
        throw UnknownExample("no figure " + std::to_string(fig));
    }
    return t;
}

std::string to_csv(const FigureTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    char buf[48];
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::snprintf(buf, sizeof(buf), "%.12g", row[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

double fig2_barrier_width(double B, double eps, double eps1, double m) {
    const double k = ks(m, eps), k1 = ks(m, eps1);
    const double lo = -0.5 * k1, hi = 0.5 * k1;
    const double step = 0.01;
    std::vector<double> xs = linspace_step(-60.0, 60.0, step);
    std::vector<double> q;
    q.reserve(xs.size());
    for (double x : xs) q.push_back(two_step_q(x, k, k1, B, 2));
    double xl = xs.front(), xr = xs.back();
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        if (q[i] < lo && q[i + 1] >= lo) {
            xl = xs[i] + step * (lo - q[i]) / (q[i + 1] - q[i]);
            break;
        }
    for (std::size_t i = q.size() - 1; i > 0; --i)
        if (q[i - 1] < hi && q[i] >= hi) {
            xr = xs[i - 1] + step * (hi - q[i - 1]) / (q[i] - q[i - 1]);
            break;
        }
    return xr - xl;
}

double fig3_deviation(double B) {
    double best = 0.0;
    for (double x : linspace_step(-10.0, 10.0, 0.01))
        best = std::max(best, std::fabs(fig3_curve(B, x) - 0.5 * x));
    return best;
}

double fig4_well_separation(double lambda1, double lambda, double m) {
    std::vector<double> xs = linspace_step(-15.0, 15.0, 0.01);
    std::vector<double> s;
    s.reserve(xs.size());
    for (double x : xs) s.push_back(soliton2_S2(x, lambda, lambda1, m));
    double x1 = 0.0, v1 = 1e300, x2 = 0.0, v2 = 1e300;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] < s[i - 1] && s[i] < s[i + 1]) {
            if (s[i] < v1) {
                v2 = v1; x2 = x1;
                v1 = s[i]; x1 = xs[i];
            } else if (s[i] < v2) {
                v2 = s[i]; x2 = xs[i];
            }
        }
    }
    return std::fabs(x1 - x2);
}

} // namespace dirac
