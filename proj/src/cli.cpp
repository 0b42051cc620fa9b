#include "dirac/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dirac/catalog.hpp"
#include "dirac/reduction.hpp"

namespace dirac {

namespace {

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> xs;
    const int n = static_cast<int>(std::lround((g.stop - g.start) / g.step));
    xs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) xs.push_back(g.start + i * g.step);
    return xs;
}

std::string csv_table(const std::vector<std::string>& cols,
                      const std::vector<std::vector<double>>& rows) {
    FigureTable t;
    t.columns = cols;
    t.rows = rows;
    return to_csv(t);
}

int write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "cannot open %s for writing\n", path.c_str());
        return 2;
    }
    out << text;
    return 0;
}

// "<builder>@<E>", builder from the free-line family
EigenSpinor parse_solution(const PotentialPtr& V, const std::string& text) {
    const auto at = text.rfind('@');
    if (at == std::string::npos)
        throw UnknownSeed("solution spec needs the form builder@E: " + text);
    return free_solution(V, std::stod(text.substr(at + 1)),
                         text.substr(0, at));
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// potential=... header followed by
// step i: seed=<fbuilder>/<gbuilder>, lambda=<v>, mu=<v>
ChainSpec parse_chain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read chain spec " + path);
    PotentialPtr V;
    std::vector<ChainStep> steps;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("potential=", 0) == 0) {
            V = seed_catalog(trim(line.substr(10)));
            continue;
        }
        const auto colon = line.find(':');
        if (line.rfind("step", 0) != 0 || colon == std::string::npos)
            throw std::invalid_argument("unrecognized chain spec line: " + line);
        if (!V)
            throw std::invalid_argument("chain spec needs a potential= header");
        std::string fb, gb;
        double lambda = 0.0, mu = 0.0;
        bool have_seed = false, have_lambda = false, have_mu = false;
        std::stringstream fields(line.substr(colon + 1));
        std::string field;
        while (std::getline(fields, field, ',')) {
            field = trim(field);
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad chain spec field: " + field);
            const std::string key = trim(field.substr(0, eq));
            const std::string val = trim(field.substr(eq + 1));
            if (key == "seed") {
                const auto slash = val.find('/');
                if (slash == std::string::npos)
                    throw std::invalid_argument(
                        "seed needs two builders <f>/<g>: " + val);
                fb = val.substr(0, slash);
                gb = val.substr(slash + 1);
                have_seed = true;
            } else if (key == "lambda") {
                lambda = std::stod(val);
                have_lambda = true;
            } else if (key == "mu") {
                mu = std::stod(val);
                have_mu = true;
            } else {
                throw std::invalid_argument("unknown chain spec key: " + key);
            }
        }
        if (!have_seed || !have_lambda || !have_mu)
            throw std::invalid_argument("incomplete chain step: " + line);
        steps.push_back({free_solution(V, lambda, fb),
                         free_solution(V, mu, gb), lambda, mu});
    }
    if (steps.empty())
        throw std::invalid_argument("chain spec defines no steps");
    return ChainSpec(std::move(steps));
}

std::string decay_name(Decay d) {
    switch (d) {
    case Decay::integrable: return "integrable";
    case Decay::non_integrable: return "non_integrable";
    default: return "indeterminate";
    }
}

} // namespace

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("grid spec needs start:stop:step");
    g.start = std::stod(text.substr(0, c1));
    g.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    g.step = std::stod(text.substr(c2 + 1));
    if (!(g.step > 0.0) || !(g.start < g.stop))
        throw std::invalid_argument("grid spec needs step > 0 and start < stop");
    return g;
}

bool verify_example_suites(const std::string& name,
                           std::vector<std::string>& lines) {
    ExampleBundle b = example(name);
    bool ok = true;
    auto emit = [&](const ResidualReport& r) {
        lines.push_back(r.line());
        ok = ok && r.pass();
    };
    emit(check_bundle(b));
    for (const auto& s : b.mapped)
        emit(equation_residual(s, *b.computed, b.interval, b.tol));
    if (b.transform)
        for (const auto& s : b.probes)
            emit(intertwining_residual(*b.transform, s, b.interval, b.tol));
    if (b.ps_step) {
        const SusyDiagramReport rep = susy_diagram_check(*b.ps_step, b.interval);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "susy_diagram,%s,%.12g,%.12g,%s",
                      name.c_str(), rep.max_coincidence,
                      std::max(rep.max_delta_minus, rep.max_delta_plus),
                      rep.pass() ? "pass" : "fail");
        lines.push_back(buf);
        ok = ok && rep.pass();
    }
    for (const auto& c : b.candidates) {
        const Decay d = decay_classify(c.phi, b.decay_window);
        const bool good =
            d == (c.integrable ? Decay::integrable : Decay::non_integrable);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "decay,%s:%s,%s,%s,%s", name.c_str(),
                      c.label.c_str(), decay_name(d).c_str(),
                      c.integrable ? "integrable" : "non_integrable",
                      good ? "pass" : "fail");
        lines.push_back(buf);
        ok = ok && good;
    }
    return ok;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Darboux transformations of the 1D stationary Dirac equation"};
    app.require_subcommand(1);

    auto* cmd_list = app.add_subcommand("list", "catalog example names");

    auto* cmd_transform =
        app.add_subcommand("transform", "one Darboux step over a seed potential");
    std::string seed_spec = "free_mass:m=1";
    std::string u1_spec, u2_spec, grid_spec = "-10:10:0.05";
    std::string out_path, map_spec, map_out;
    double eps = 0.5;
    bool allow_singular = false;
    cmd_transform->add_option("--seed", seed_spec, "seed potential spec");
    cmd_transform->add_option("--eps", eps, "energy of the default sinh seed");
    cmd_transform->add_option("--u1", u1_spec, "first seed, builder@E");
    cmd_transform->add_option("--u2", u2_spec, "second seed, builder@E");
    cmd_transform->add_option("--grid", grid_spec, "start:stop:step");
    cmd_transform->add_option("--out", out_path, "potential CSV path");
    cmd_transform->add_option("--map", map_spec,
                              "also map this solution, builder@E");
    cmd_transform->add_option("--map-out", map_out, "mapped solution CSV path");
    cmd_transform->add_flag("--allow-singular", allow_singular,
                            "skip the determinant zero scan");

    auto* cmd_chain = app.add_subcommand("chain", "n-step determinant chain");
    std::string chain_path;
    bool cross_check = false;
    cmd_chain->add_option("--spec", chain_path, "chain spec file")->required();
    cmd_chain->add_option("--grid", grid_spec, "start:stop:step");
    cmd_chain->add_option("--out", out_path, "potential CSV path");
    cmd_chain->add_flag("--cross-check", cross_check,
                        "compare against sequential one-step builds");

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    bool all = false;
    std::string example_name;
    cmd_verify->add_flag("--all", all, "every catalog example");
    cmd_verify->add_option("--example", example_name, "one catalog example");

    auto* cmd_figure = app.add_subcommand("figure", "catalog figure data");
    int fig_n = 2;
    bool figure_variant = false;
    cmd_figure->add_option("--n", fig_n, "figure number")
        ->check(CLI::IsMember({2, 3, 4, 5}))
        ->required();
    cmd_figure->add_flag("--figure-variant", figure_variant,
                         "alternate caption reading of figure 2");
    cmd_figure->add_option("--out", out_path, "CSV path");

    auto* cmd_reduce =
        app.add_subcommand("reduce", "Schrodinger pair and diagram check");
    std::string reduce_example = "ex1";
    cmd_reduce->add_option("--example", reduce_example,
                           "catalog example with a pseudoscalar step");
    cmd_reduce->add_option("--grid", grid_spec, "start:stop:step");
    cmd_reduce->add_option("--out", out_path, "CSV path");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_list->parsed()) {
            for (const auto& name : example_names())
                std::printf("%s  %s\n", name.c_str(),
                            example(name).title.c_str());
            return 0;
        }

        if (cmd_transform->parsed()) {
            PotentialPtr V = seed_catalog(seed_spec);
            EigenSpinor u1 = u1_spec.empty()
                                 ? free_solution(V, V->mass(), "one")
                                 : parse_solution(V, u1_spec);
            EigenSpinor u2 = u2_spec.empty()
                                 ? free_solution(V, eps, "sinh")
                                 : parse_solution(V, u2_spec);
            TransformFunction T = build_transform(u1, u2, allow_singular);
            const GridSpec g = parse_grid(grid_spec);
            std::vector<std::vector<double>> rows;
            for (double x : grid_points(g))
                rows.push_back({x, T.transformed()->p()(x),
                                T.transformed()->q()(x)});
            const int rc = write_out(out_path, csv_table({"x", "p", "q"}, rows));
            if (rc || map_spec.empty()) return rc;
            EigenSpinor phi = apply_forward(T, parse_solution(V, map_spec));
            rows.clear();
            for (double x : grid_points(g)) {
                const Vec2 v = phi.value(x);
                rows.push_back({x, v.a, v.b});
            }
            return write_out(map_out, csv_table({"x", "phi1", "phi2"}, rows));
        }

        if (cmd_chain->parsed()) {
            ChainSpec spec = parse_chain_file(chain_path);
            PotentialPtr Vn = chain_potential(spec);
            const GridSpec g = parse_grid(grid_spec);
            std::vector<std::vector<double>> rows;
            for (double x : grid_points(g))
                rows.push_back({x, Vn->p()(x), Vn->q()(x)});
            const int rc = write_out(out_path, csv_table({"x", "p", "q"}, rows));
            if (rc || !cross_check) return rc;
            SequentialChain seq = sequential_chain(spec);
            double worst = 0.0;
            for (double x : grid_points(g)) {
                worst = std::max(worst,
                                 std::fabs(Vn->p()(x) -
                                           seq.final_potential->p()(x)));
                worst = std::max(worst,
                                 std::fabs(Vn->q()(x) -
                                           seq.final_potential->q()(x)));
            }
            std::printf("cross_check,max_deviation,%.12g,%s\n", worst,
                        worst <= 1e-8 ? "pass" : "fail");
            return worst <= 1e-8 ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            if (all == !example_name.empty()) {
                std::cerr << "verify needs exactly one of --all, --example\n";
                return 2;
            }
            std::vector<std::string> names =
                all ? example_names() : std::vector<std::string>{example_name};
            bool ok = true;
            for (const auto& name : names) {
                std::vector<std::string> lines;
                ok = verify_example_suites(name, lines) && ok;
                for (const auto& line : lines)
                    std::printf("%s\n", line.c_str());
            }
            return ok ? 0 : 1;
        }

        if (cmd_figure->parsed())
            return write_out(out_path, to_csv(figure_data(fig_n, figure_variant)));

        if (cmd_reduce->parsed()) {
            ExampleBundle b = example(reduce_example);
            if (!b.ps_step) {
                std::cerr << reduce_example
                          << " carries no pseudoscalar step\n";
                return 2;
            }
            const PseudoscalarStep& step = *b.ps_step;
            SchrodingerPair s0 =
                pseudoscalar_to_schrodinger(step.V0->q(), step.mass_in);
            SchrodingerPair s1 =
                pseudoscalar_to_schrodinger(step.V1->q(), step.mass_out);
            const GridSpec g = parse_grid(grid_spec);
            std::vector<std::vector<double>> rows;
            for (double x : grid_points(g))
                rows.push_back({x, s0.U_plus(x), s0.U_minus(x), s1.U_plus(x),
                                s1.U_minus(x)});
            const int rc = write_out(
                out_path,
                csv_table({"x", "U0_plus", "U0_minus", "U1_plus", "U1_minus"},
                          rows));
            if (rc) return rc;
            const SusyDiagramReport rep =
                susy_diagram_check(step, b.interval);
            std::printf("susy_diagram,%s,%.12g,%.12g,%.12g,%.12g,%s\n",
                        reduce_example.c_str(), rep.max_coincidence,
                        rep.max_delta_minus, rep.max_delta_plus,
                        rep.energy_shift, rep.pass() ? "pass" : "fail");
            return rep.pass() ? 0 : 1;
        }
    } catch (const UnknownExample& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace dirac
