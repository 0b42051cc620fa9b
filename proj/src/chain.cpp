#include "dirac/chain.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "dirac/errors.hpp"

namespace dirac {

namespace {

double magnitude(double v) { return std::fabs(v); }
double magnitude(const Jet& v) { return std::fabs(v.value()); }

// Cofactor expansion along the first column; exact for matrices whose value
// part is singular at the evaluation point (jet determinants still have
// well-defined higher coefficients there). Used only as a fallback.
template <class T>
T det_laplace(const std::vector<std::vector<T>>& m, const T& zero) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    T acc = zero;
    double sign = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::vector<T>> minor;
        minor.reserve(n - 1);
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr == r) continue;
            std::vector<T> row(m[rr].begin() + 1, m[rr].end());
            minor.push_back(std::move(row));
        }
        acc = acc + m[r][0] * det_laplace(minor, zero) * sign;
        sign = -sign;
    }
    return acc;
}

template <class T>
T det_matrix(std::vector<std::vector<T>> m, const T& zero,
             double* pivot_ratio = nullptr) {
    const std::size_t n = m.size();
    T det = zero;
    bool first = true;
    double sign = 1.0;
    double pmin = std::numeric_limits<double>::infinity(), pmax = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (magnitude(m[r][col]) > magnitude(m[piv][col])) piv = r;
        // Row operations so far preserved the determinant (up to the tracked
        // sign), so the cofactor fallback can take over on the partially
        // reduced matrix when no usable pivot value remains.
        if (magnitude(m[piv][col]) < 1e-250) {
            if (pivot_ratio) *pivot_ratio = std::numeric_limits<double>::infinity();
            return det_laplace(m, zero) * sign;
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        const double pm = magnitude(m[col][col]);
        pmin = std::min(pmin, pm);
        pmax = std::max(pmax, pm);
        for (std::size_t r = col + 1; r < n; ++r) {
            T factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] = m[r][c] - factor * m[col][c];
        }
        if (first) {
            det = m[col][col];
            first = false;
        } else {
            det = det * m[col][col];
        }
    }
    if (pivot_ratio) *pivot_ratio = (pmin > 0.0) ? pmax / pmin : 0.0;
    return det * sign;
}

Jet shifted(const Jet& full, int l, int K) {
    Jet r(K);
    for (int k = 0; k <= K; ++k)
        r[static_cast<std::size_t>(k)] = full[static_cast<std::size_t>(l + k)];
    return r;
}

struct JetTable {
    std::vector<JetVec2> cols; // full jets of each spinor
    int K;

    Jet entry(std::size_t col, int l, bool first_comp) const {
        return shifted(first_comp ? cols[col].a : cols[col].b, l, K);
    }
};

JetTable make_table(const std::vector<EigenSpinor>& spinors, double x,
                    int max_deriv, int K) {
    JetTable t;
    t.K = K;
    t.cols.reserve(spinors.size());
    for (const auto& s : spinors) t.cols.push_back(s.jets(x, max_deriv + K));
    return t;
}

// Base 2n x 2n arrangement: row 2l (0-based) = l-th derivatives of first
// components, row 2l+1 = l-th derivatives of second components.
std::vector<std::vector<Jet>> base_matrix(const JetTable& t) {
    const std::size_t cols = t.cols.size();
    const std::size_t n = cols / 2;
    std::vector<std::vector<Jet>> m(cols, std::vector<Jet>(cols));
    for (std::size_t r = 0; r < cols; ++r) {
        const int l = static_cast<int>(r / 2);
        const bool first = (r % 2 == 0);
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = t.entry(c, l, first);
    }
    (void)n;
    return m;
}

Jet det_with_row(const JetTable& t, std::size_t replaced_row, int deriv,
                 bool first_comp, double* ratio = nullptr) {
    auto m = base_matrix(t);
    for (std::size_t c = 0; c < m.size(); ++c)
        m[replaced_row][c] = t.entry(c, deriv, first_comp);
    return det_matrix(std::move(m), Jet::constant(0.0, t.K), ratio);
}

} // namespace

int chain_max_depth() {
    if (const char* env = std::getenv("DARBOUX_MAX_DEPTH")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 4;
}

ChainSpec::ChainSpec(std::vector<ChainStep> steps, int max_depth)
    : steps_(std::move(steps)) {
    if (steps_.empty()) throw Error("chain needs at least one step");
    if (depth() > max_depth)
        throw Error("chain depth " + std::to_string(depth()) +
                    " exceeds the configured maximum " +
                    std::to_string(max_depth));
    parent_ = steps_.front().f.parent();
    std::vector<double> eigs;
    for (auto& st : steps_) {
        st.lambda = st.f.E();
        st.mu = st.g.E();
        if (st.f.parent() != parent_ || st.g.parent() != parent_)
            throw Error("chain seeds must share one parent potential");
        if (st.lambda == st.mu)
            throw EqualEigenvalues("lambda == mu within a chain step");
        eigs.push_back(st.lambda);
        eigs.push_back(st.mu);
        spinors_.push_back(st.f);
        spinors_.push_back(st.g);
    }
    for (std::size_t i = 0; i < eigs.size(); ++i)
        for (std::size_t j = i + 1; j < eigs.size(); ++j)
            if (eigs[i] == eigs[j])
                throw EqualEigenvalues("repeated eigenvalue across chain steps");

    const Interval w = parent_->working_interval();
    std::vector<double> nodes;
    double prev = block_wronskian(spinors_, w.lo);
    double scale = std::fabs(prev);
    for (int i = 1; i < 201; ++i) {
        const double x = w.lo + (w.hi - w.lo) * i / 200;
        const double v = block_wronskian(spinors_, x);
        scale = std::max(scale, std::fabs(v));
        if (prev * v < 0.0 || v == 0.0) nodes.push_back(x);
        prev = v;
    }
    if (!nodes.empty()) throw DegenerateOnGrid(std::move(nodes));
}

double block_wronskian(const std::vector<EigenSpinor>& spinors, double x) {
    return block_wronskian_jet(spinors, x, 0).value();
}

Jet block_wronskian_jet(const std::vector<EigenSpinor>& spinors, double x,
                        int order) {
    const int n = static_cast<int>(spinors.size()) / 2;
    JetTable t = make_table(spinors, x, n - 1, order);
    return det_matrix(base_matrix(t), Jet::constant(0.0, order));
}

std::pair<double, double> odd_wronskians(const std::vector<EigenSpinor>& spinors,
                                         const EigenSpinor& psi, double x) {
    const std::size_t cols = spinors.size();
    const int n = static_cast<int>(cols) / 2;
    std::vector<EigenSpinor> all = spinors;
    all.push_back(psi);
    JetTable t = make_table(all, x, n, 0);
    const std::size_t dim = cols + 1;
    std::vector<std::vector<Jet>> m(dim, std::vector<Jet>(dim));
    for (std::size_t r = 0; r + 1 < dim; ++r) {
        const int l = static_cast<int>(r / 2);
        const bool first = (r % 2 == 0);
        for (std::size_t c = 0; c < dim; ++c) m[r][c] = t.entry(c, l, first);
    }
    auto m2 = m;
    for (std::size_t c = 0; c < dim; ++c) {
        m[dim - 1][c] = t.entry(c, n, true);
        m2[dim - 1][c] = t.entry(c, n, false);
    }
    const double w1 = det_matrix(std::move(m), Jet::constant(0.0, 0)).value();
    const double w2 = det_matrix(std::move(m2), Jet::constant(0.0, 0)).value();
    return {w1, w2};
}

RowReplacedDets row_replaced_dets(const std::vector<EigenSpinor>& spinors,
                                  double x) {
    const std::size_t cols = spinors.size();
    const int n = static_cast<int>(cols) / 2;
    JetTable t = make_table(spinors, x, n, 0);
    RowReplacedDets out{};
    out.R1 = det_with_row(t, cols - 2, n, true).value();
    out.R2 = det_with_row(t, cols - 1, n, false).value();
    out.Q1 = det_with_row(t, cols - 1, n, true).value();
    out.Q2 = det_with_row(t, cols - 2, n, false).value();
    return out;
}

Vec2 chain_apply(const ChainSpec& c, const EigenSpinor& psi, double x) {
    auto [w1, w2] = odd_wronskians(c.spinors(), psi, x);
    const double w = block_wronskian(c.spinors(), x);
    return {w1 / w, w2 / w};
}

EigenSpinor chain_spinor(const ChainSpec& c, const EigenSpinor& psi) {
    if (psi.parent() != c.parent())
        throw Error("chain_spinor: spinor not bound to the parent potential");
    auto spinors = c.spinors();
    const int n = c.depth();
    PotentialPtr target = chain_potential(c);
    auto jet_fn = [spinors, psi, n](double x, int order) {
        std::vector<EigenSpinor> all = spinors;
        all.push_back(psi);
        JetTable t = make_table(all, x, n, order);
        const std::size_t dim = spinors.size() + 1;
        std::vector<std::vector<Jet>> m(dim, std::vector<Jet>(dim));
        for (std::size_t r = 0; r + 1 < dim; ++r) {
            const int l = static_cast<int>(r / 2);
            const bool first = (r % 2 == 0);
            for (std::size_t col = 0; col < dim; ++col)
                m[r][col] = t.entry(col, l, first);
        }
        auto m2 = m;
        for (std::size_t col = 0; col < dim; ++col) {
            m[dim - 1][col] = t.entry(col, n, true);
            m2[dim - 1][col] = t.entry(col, n, false);
        }
        Jet w1 = det_matrix(std::move(m), Jet::constant(0.0, order));
        Jet w2 = det_matrix(std::move(m2), Jet::constant(0.0, order));
        JetTable tw = make_table(spinors, x, n - 1, order);
        Jet iw = det_matrix(base_matrix(tw), Jet::constant(0.0, order)).reciprocal();
        return JetVec2{w1 * iw, w2 * iw};
    };
    return EigenSpinor::with_jets(target, psi.E(), jet_fn, "chain_map");
}

PotentialPtr chain_potential(const ChainSpec& c) {
    auto spinors = c.spinors();
    const int n = c.depth();
    const PotentialPtr parent = c.parent();
    const int ord = parent->max_deriv_order();

    auto correction = [spinors, n](double x, int k, bool for_p) {
        JetTable t = make_table(spinors, x, n, k);
        const std::size_t cols = spinors.size();
        Jet iw;
        {
            JetTable tw = make_table(spinors, x, n - 1, k);
            iw = det_matrix(base_matrix(tw), Jet::constant(0.0, k)).reciprocal();
        }
        if (for_p) {
            Jet q1 = det_with_row(t, cols - 1, n, true);
            Jet q2 = det_with_row(t, cols - 2, n, false);
            return ((q1 + q2) * iw)[static_cast<std::size_t>(k)];
        }
        Jet r1 = det_with_row(t, cols - 2, n, true);
        Jet r2 = det_with_row(t, cols - 1, n, false);
        return ((r2 - r1) * iw)[static_cast<std::size_t>(k)];
    };

    ScalarField pn(
        [parent, correction](double x, int k) {
            return parent->p().deriv(x, k) + correction(x, k, true);
        },
        ord, parent->domain());
    ScalarField qn(
        [parent, correction](double x, int k) {
            return parent->q().deriv(x, k) + correction(x, k, false);
        },
        ord, parent->domain());
    return std::make_shared<Potential>(std::move(pn), std::move(qn),
                                       parent->working_interval(),
                                       std::numeric_limits<double>::quiet_NaN(),
                                       parent->rep());
}

double chain_pivot_ratio(const ChainSpec& c, double x) {
    const int n = c.depth();
    JetTable t = make_table(c.spinors(), x, n - 1, 0);
    double ratio = 0.0;
    det_matrix(base_matrix(t), Jet::constant(0.0, 0), &ratio);
    return ratio;
}

EigenSpinor SequentialChain::map(const EigenSpinor& psi) const {
    EigenSpinor cur = psi;
    for (const auto& T : transforms) cur = apply_forward(T, cur);
    return cur;
}

SequentialChain sequential_chain(const ChainSpec& c) {
    SequentialChain seq;
    std::vector<std::pair<EigenSpinor, EigenSpinor>> pending;
    for (const auto& st : c.steps()) pending.push_back({st.f, st.g});
    for (std::size_t i = 0; i < pending.size(); ++i) {
        TransformFunction T = build_transform(pending[i].first, pending[i].second);
        for (std::size_t j = i + 1; j < pending.size(); ++j) {
            pending[j].first = apply_forward(T, pending[j].first);
            pending[j].second = apply_forward(T, pending[j].second);
        }
        seq.transforms.push_back(T);
    }
    seq.final_potential = seq.transforms.back().transformed();
    return seq;
}

} // namespace dirac
