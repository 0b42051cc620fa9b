#pragma once

#include <array>
#include <vector>

#include "dirac/darboux.hpp"
#include "dirac/potential.hpp"
#include "dirac/spinor.hpp"

namespace dirac {

struct ChainStep {
    EigenSpinor f, g;
    double lambda = 0.0;
    double mu = 0.0;
};

int chain_max_depth(); // DARBOUX_MAX_DEPTH override, default 4

// Ordered list of transformation-function constructions defining L_{n<-0}.
class ChainSpec {
public:
    explicit ChainSpec(std::vector<ChainStep> steps,
                       int max_depth = chain_max_depth());

    const std::vector<ChainStep>& steps() const { return steps_; }
    int depth() const { return static_cast<int>(steps_.size()); }
    const PotentialPtr& parent() const { return parent_; }
    // f1, g1, f2, g2, ...
    const std::vector<EigenSpinor>& spinors() const { return spinors_; }

private:
    std::vector<ChainStep> steps_;
    std::vector<EigenSpinor> spinors_;
    PotentialPtr parent_;
};

// 2n x 2n block Wronskian W(f1, g1, ..., fn, gn).
double block_wronskian(const std::vector<EigenSpinor>& spinors, double x);
Jet block_wronskian_jet(const std::vector<EigenSpinor>& spinors, double x,
                        int order);

// The two (2n+1)-order determinants with psi appended and a last row of n-th
// derivatives of first (W1) or second (W2) components.
std::pair<double, double> odd_wronskians(const std::vector<EigenSpinor>& spinors,
                                         const EigenSpinor& psi, double x);

// R1: row 2n-1 replaced by n-th derivatives of first components.
// R2: row 2n   replaced by n-th derivatives of second components.
// Q1: row 2n   replaced by n-th derivatives of first components.
// Q2: row 2n-1 replaced by n-th derivatives of second components.
// Identity W' = R1 + R2.
struct RowReplacedDets {
    double R1, R2, Q1, Q2;
};
RowReplacedDets row_replaced_dets(const std::vector<EigenSpinor>& spinors,
                                  double x);

Vec2 chain_apply(const ChainSpec& c, const EigenSpinor& psi, double x);

// The chain image as a spinor over chain_potential(c), with structural jets
// from the determinant formulas.
EigenSpinor chain_spinor(const ChainSpec& c, const EigenSpinor& psi);

// V_n = V_0 + [gamma, D_n]: p_n = p_0 + (Q1+Q2)/W, q_n = q_0 + (R2-R1)/W.
PotentialPtr chain_potential(const ChainSpec& c);

// Max ratio |largest pivot| / |smallest pivot| across the chain determinants
// at x; > 1e10 indicates an ill-conditioned seed set.
double chain_pivot_ratio(const ChainSpec& c, double x);

// Sequential one-step composition, the oracle for the determinant route.
struct SequentialChain {
    std::vector<TransformFunction> transforms;
    PotentialPtr final_potential;

    EigenSpinor map(const EigenSpinor& psi) const;
};
SequentialChain sequential_chain(const ChainSpec& c);

} // namespace dirac
