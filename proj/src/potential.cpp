#include "dirac/potential.hpp"

#include <cmath>

#include "dirac/errors.hpp"

namespace dirac {

namespace {

constexpr int probe_points = 33;
constexpr double class_eps = 1e-12;

double probe_x(const Interval& w, int i) {
    return w.lo + (w.hi - w.lo) * (i + 0.5) / probe_points;
}

} // namespace

Potential::Potential(ScalarField p, ScalarField q, Interval working, double mass,
                     ScalarRep rep)
    : p_(std::move(p)), q_(std::move(q)), working_(working), mass_(mass),
      rep_(rep) {
    domain_ = {std::max(p_.domain().lo, q_.domain().lo),
               std::min(p_.domain().hi, q_.domain().hi)};
    max_order_ = std::min(p_.max_order(), q_.max_order());

    bool p_const = true, q_zero = true, p_zero = true;
    bool have_p0 = false;
    double p0 = 0.0;
    for (int i = 0; i < probe_points; ++i) {
        const double x = probe_x(working_, i);
        // isolated poles are tolerated here; classification only needs the
        // points where both fields evaluate
        try {
            const double pv = p_(x), qv = q_(x);
            if (!have_p0) { p0 = pv; have_p0 = true; }
            if (std::fabs(pv - p0) > class_eps) p_const = false;
            if (std::fabs(qv) > class_eps) q_zero = false;
            if (std::fabs(pv) > class_eps) p_zero = false;
        } catch (const Error&) {
            continue;
        }
    }
    pseudoscalar_ = p_const && rep_ == ScalarRep::sigma3;
    scalar_ = (rep_ == ScalarRep::sigma3) ? q_zero : p_zero;
    if (std::isnan(mass_)) {
        if (pseudoscalar_) mass_ = p0;
        if (scalar_ && p_const) mass_ = p0;
    }
}

PotentialClass Potential::class_tag() const {
    if (scalar_ && pseudoscalar_) return PotentialClass::scalar_pseudoscalar;
    if (scalar_) return PotentialClass::scalar;
    if (pseudoscalar_) return PotentialClass::pseudoscalar;
    return PotentialClass::general;
}

std::string Potential::class_name() const {
    switch (class_tag()) {
        case PotentialClass::scalar_pseudoscalar: return "scalar+pseudoscalar";
        case PotentialClass::scalar:
            return rep_ == ScalarRep::hat ? "scalar(hat)" : "scalar";
        case PotentialClass::pseudoscalar: return "pseudoscalar";
        default: return "general";
    }
}

Mat2 Potential::at(double x, int k) const {
    if (k > max_order_) throw OrderUnavailable("potential derivative order");
    return p_.deriv(x, k) * SIGMA3 + q_.deriv(x, k) * SIGMA1;
}

Mat2 potential_at(const Potential& V, double x, int k) { return V.at(x, k); }

PotentialPtr make_canonical(ScalarField p, ScalarField q, Interval working) {
    return std::make_shared<Potential>(std::move(p), std::move(q), working);
}

PotentialPtr free_mass(double m) {
    return std::make_shared<Potential>(ScalarField(m), ScalarField(0.0),
                                       Interval{-8.0, 8.0}, m);
}

PotentialPtr dirac_oscillator(double m) {
    ScalarField q([](double x, int k) {
        if (k == 0) return 0.5 * x;
        return k == 1 ? 0.5 : 0.0;
    }, std::numeric_limits<int>::max());
    return std::make_shared<Potential>(ScalarField(m), std::move(q),
                                       Interval{-8.0, 8.0}, m);
}

namespace {

// j-th derivative of c/r
double inv_pow_deriv(double c, double r, int j) {
    double v = c / r;
    for (int i = 1; i <= j; ++i) v *= -static_cast<double>(i) / r;
    return v;
}

Interval radial_working(double r_min) {
    const double lo = std::max(0.05, r_min * 1.05);
    return {lo, lo + 20.0};
}

} // namespace

PotentialPtr scalar_coulomb(double m, double alpha, double r_min) {
    Interval dom{r_min, std::numeric_limits<double>::infinity()};
    ScalarField q([m, alpha](double r, int k) {
        if (k == 0) return m - alpha / r;
        return -inv_pow_deriv(alpha, r, k);
    }, std::numeric_limits<int>::max(), dom);
    return std::make_shared<Potential>(
        ScalarField(ScalarField::Provider([](double, int) { return 0.0; }),
                    std::numeric_limits<int>::max(), dom),
        std::move(q), radial_working(r_min), m, ScalarRep::hat);
}

PotentialPtr radial_free(double m, double kappa, double r_min) {
    Interval dom{r_min, std::numeric_limits<double>::infinity()};
    ScalarField q([kappa](double r, int k) {
        return inv_pow_deriv(kappa, r, k);
    }, std::numeric_limits<int>::max(), dom);
    ScalarField p(ScalarField::Provider([m](double, int k) {
                      return k == 0 ? m : 0.0;
                  }),
                  std::numeric_limits<int>::max(), dom);
    return std::make_shared<Potential>(std::move(p), std::move(q),
                                       radial_working(r_min), m);
}

PotentialPtr seed_catalog(const std::string& spec) {
    std::string name = spec;
    std::string params;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        params = spec.substr(pos + 1);
    }
    double m = 1.0, alpha = 1.0, kappa = 1.0;
    std::size_t start = 0;
    while (start < params.size()) {
        auto end = params.find(',', start);
        if (end == std::string::npos) end = params.size();
        auto kv = params.substr(start, end - start);
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw UnknownSeed("bad parameter: " + kv);
        const std::string key = kv.substr(0, eq);
        const double val = std::stod(kv.substr(eq + 1));
        if (key == "m") m = val;
        else if (key == "alpha") alpha = val;
        else if (key == "k") kappa = val;
        else throw UnknownSeed("unknown parameter: " + key);
        start = end + 1;
    }
    if (name == "free_mass") return free_mass(m);
    if (name == "dirac_oscillator") return dirac_oscillator(m);
    if (name == "scalar_coulomb") return scalar_coulomb(m, alpha);
    if (name == "radial_free") return radial_free(m, kappa);
    throw UnknownSeed("unknown seed: " + name);
}

} // namespace dirac
