#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dirac/chain.hpp"
#include "dirac/darboux.hpp"
#include "dirac/verify.hpp"

namespace dirac {

using Params = std::map<std::string, double>;

// A solution of the transformed equation together with the expected
// verdict of the decay classifier at its energy.
struct SpectralCandidate {
    std::string label;
    double E = 0.0;
    EigenSpinor phi;
    bool integrable = false;
};

// Everything a worked example carries: the construction route(s), the
// machinery result, the frozen closed forms, and the solutions used by the
// verification suites.
struct ExampleBundle {
    std::string name;
    std::string title;

    PotentialPtr seed;
    PotentialPtr computed;
    ScalarField expected_p, expected_q;

    Interval interval;       // closed-form comparison window
    Interval decay_window;   // window handed to decay_classify
    double tol = 1e-8;

    // whichever construction routes the example exercises
    std::shared_ptr<TransformFunction> transform; // defining (last) one-step
    std::shared_ptr<PseudoscalarStep> ps_step;
    std::vector<ScalarStep> scalar_steps;
    std::shared_ptr<ChainSpec> chain;

    std::vector<EigenSpinor> probes;  // solutions over transform->parent()
    std::vector<EigenSpinor> mapped;  // solutions over computed
    std::vector<SpectralCandidate> candidates;
    std::vector<double> levels;       // energies expected to survive as bound states
};

const std::vector<std::string>& example_names(); // ex1 .. ex14

ExampleBundle example(const std::string& name, const Params& overrides = {});

// Max |computed - closed form| over both potential entries on a uniform grid.
ResidualReport check_bundle(const ExampleBundle& b, int grid_points = 201);
ResidualReport check_example(const std::string& name, int grid_points = 201,
                             const Params& overrides = {});

// Free-line solution (f, -f'/(E+m)) with f'' = (m^2-E^2) f; builder is one of
// one, cosh, sinh, expp, expm, coshB:<B>. Shared with the CLI chain grammar.
EigenSpinor free_solution(const PotentialPtr& V, double E,
                          const std::string& builder);

// (e^{skx}, (m-sk)e^{skx}/E) over a constant scalar potential in the hat
// representation; sign s = +-1, E != 0.
EigenSpinor hat_free_solution(const PotentialPtr& V, double E, int sign);

struct FigureTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Deterministic data behind the four catalog plots (fig in {2,3,4,5}).
// The variant flag switches fig 2 to the alternate caption reading.
FigureTable figure_data(int fig, bool variant = false);

// CSV with an "x,series..." header, LF line endings, 12 significant digits.
std::string to_csv(const FigureTable& t);

// Scalar metrics backing the figure property checks.
double fig2_barrier_width(double B, double eps, double eps1, double m = 1.0);
double fig3_deviation(double B);
double fig4_well_separation(double lambda1, double lambda, double m = 1.0);

} // namespace dirac
