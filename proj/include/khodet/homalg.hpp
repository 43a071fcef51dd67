#pragma once

// Chain complexes over F_2 (graded or not), differential modules over
// F_2[X]/(X^2), free differential modules over F_2[t,t^-1], and the
// two-step decomposition over that PID.

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "f2.hpp"
#include "poly_matrix.hpp"

namespace khodet {

// signals a mathematically-impossible state (a bug), as opposed to bad input
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

using Bigrading = std::vector<std::pair<int, int>>; // (homological, quantum) per basis index

struct F2Complex {
    int dim = 0;
    F2Matrix d;                          // square, d*d = 0
    std::optional<Bigrading> grading;    // validated if present

    F2Complex() = default;
    F2Complex(F2Matrix diff, std::optional<Bigrading> gr = std::nullopt)
        : dim(diff.rows()), d(std::move(diff)), grading(std::move(gr)) {
        if (d.rows() != d.cols()) throw std::invalid_argument("F2Complex: differential not square");
        if (!(d * d).is_zero()) throw std::invalid_argument("F2Complex: d^2 != 0");
        if (grading) {
            if (static_cast<int>(grading->size()) != dim)
                throw std::invalid_argument("F2Complex: grading size mismatch");
            check_shift(d, *grading, 1, 0, "differential");
        }
    }

    static void check_shift(const F2Matrix& m, const Bigrading& g, int dh, int dq,
                            const char* what) {
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i)
                if (m.get(i, j)) {
                    if (g[i].first != g[j].first + dh || g[i].second != g[j].second + dq)
                        throw std::invalid_argument(std::string("F2Complex: ") + what +
                                                    " breaks the grading");
                }
    }
};

// ungraded homology dimension: dim - 2 rank(d)
inline int homology_dim(const F2Complex& c) { return c.dim - 2 * c.d.rank(); }

// per-(h,q) dimension table for a bigraded complex, sorted by (h,q)
inline std::map<std::pair<int, int>, int> homology_dims_graded(const F2Complex& c) {
    if (!c.grading) throw std::invalid_argument("homology_dims_graded: complex is ungraded");
    std::map<std::pair<int, int>, std::vector<int>> blocks;
    for (int i = 0; i < c.dim; ++i) blocks[(*c.grading)[i]].push_back(i);
    std::map<std::pair<int, int>, int> out;
    for (auto& [hq, idx] : blocks) {
        auto tgt = blocks.find({hq.first + 1, hq.second});
        auto src = blocks.find({hq.first - 1, hq.second});
        int rk_out = 0, rk_in = 0;
        if (tgt != blocks.end()) {
            F2Matrix blk(static_cast<int>(tgt->second.size()), static_cast<int>(idx.size()));
            for (size_t jj = 0; jj < idx.size(); ++jj)
                for (size_t ii = 0; ii < tgt->second.size(); ++ii)
                    if (c.d.get(tgt->second[ii], idx[jj])) blk.set(static_cast<int>(ii), static_cast<int>(jj), true);
            rk_out = blk.rank();
        }
        if (src != blocks.end()) {
            F2Matrix blk(static_cast<int>(idx.size()), static_cast<int>(src->second.size()));
            for (size_t jj = 0; jj < src->second.size(); ++jj)
                for (size_t ii = 0; ii < idx.size(); ++ii)
                    if (c.d.get(idx[ii], src->second[jj])) blk.set(static_cast<int>(ii), static_cast<int>(jj), true);
            rk_in = blk.rank();
        }
        int dim = static_cast<int>(idx.size()) - rk_out - rk_in;
        if (dim) out[hq] = dim;
    }
    return out;
}

// differential module over F_2[X]/(X^2)
struct DGModuleX {
    F2Complex cx;
    F2Matrix x;

    DGModuleX() = default;
    DGModuleX(F2Complex c, F2Matrix xact) : cx(std::move(c)), x(std::move(xact)) {
        if (x.rows() != cx.dim || x.cols() != cx.dim)
            throw std::invalid_argument("DGModuleX: X action has wrong shape");
        if (!(x * x).is_zero()) throw std::invalid_argument("DGModuleX: X^2 != 0");
        if (!(x * cx.d + cx.d * x).is_zero())
            throw std::invalid_argument("DGModuleX: X does not commute with d");
        if (cx.grading) F2Complex::check_shift(x, *cx.grading, 0, -2, "X action");
    }
    int dim() const { return cx.dim; }
};

struct HomologyModule {
    int dim = 0;         // dim of homology
    F2Matrix x_on_h;     // induced X action, squares to zero
    Retraction retract;  // of the underlying complex
};

inline HomologyModule homology_module(const DGModuleX& m) {
    HomologyModule out;
    out.retract = make_retraction(m.cx.d);
    out.dim = out.retract.hom_dim;
    out.x_on_h = out.retract.proj * m.x * out.retract.incl;
    if (!(out.x_on_h * out.x_on_h).is_zero())
        throw InconsistencyError("homology_module: induced X does not square to zero");
    return out;
}

// Freeness over the local ring F_2[X]/(X^2): Nakayama dimension count.
inline bool is_free_over_x(int dim_h, const F2Matrix& x_on_h) {
    if (!(x_on_h * x_on_h).is_zero())
        throw std::invalid_argument("is_free_over_x: X^2 != 0 on homology");
    return 2 * x_on_h.rank() == dim_h;
}

// Freeness over F_2[W,X]/(W^2,X^2): dim H = 4 dim H/(WH + XH).
inline bool is_free_over_wx(int dim_h, const F2Matrix& w_on_h, const F2Matrix& x_on_h) {
    if (!(w_on_h * w_on_h).is_zero() || !(x_on_h * x_on_h).is_zero())
        throw std::invalid_argument("is_free_over_wx: action does not square to zero");
    if (!(w_on_h * x_on_h + x_on_h * w_on_h).is_zero())
        throw std::invalid_argument("is_free_over_wx: actions do not commute");
    int top = dim_h - F2Matrix::hstack(w_on_h, x_on_h).rank(); // dim H/(WH+XH)
    return dim_h == 4 * top;
}

// finitely generated free differential module over F_2[t,t^-1]
struct LaurentComplex {
    int rank = 0;
    PolyMatrix d;

    LaurentComplex() = default;
    explicit LaurentComplex(PolyMatrix diff) : rank(diff.rows()), d(std::move(diff)) {
        if (d.rows() != d.cols()) throw std::invalid_argument("LaurentComplex: not square");
        if (!(d * d).is_zero()) throw std::invalid_argument("LaurentComplex: d^2 != 0");
    }
};

// basis change realizing d(b_i) = q_i c_i, d(c_i) = d(d_j) = 0
struct TwoStepDecomposition {
    PolyMatrix basis_change;                        // columns: b_1..b_r, c_1..c_r, frees
    std::vector<std::tuple<int, int, LaurentPoly>> pairs; // (b column, c column, q)
    std::vector<int> free_indices;                  // columns of basis_change

    // the differential in the new basis
    PolyMatrix two_step_matrix(int n) const {
        PolyMatrix s(n, n);
        for (const auto& [b, c, q] : pairs) s.at(c, b) = q;
        return s;
    }
};

// Split ker(d) off as in the PID decomposition, then Smith normal form on
// the induced block.  q_i are valuation-normalized.
inline TwoStepDecomposition decompose_two_step(const LaurentComplex& c) {
    const int n = c.rank;
    SmithNormalForm s = smith_normal_form(c.d);
    const int r = s.rank;
    std::vector<int> piv, non;
    for (int i = 0; i < n; ++i) (i < r ? piv : non).push_back(i);

    // B = V e_piv (maps onto C/ker), K = V e_non (basis of ker).
    // d = U^-1 D V^-1, so the K-coordinates of d(V e_i) are rows `non` of
    // V^-1 U^-1 D.
    auto invert = [](const PolyMatrix& m) {
        SmithNormalForm f = smith_normal_form(m);
        // m = U^-1 D V^-1 with D diagonal units (m invertible); m^-1 = V D^-1 U
        const int k = m.rows();
        PolyMatrix dinv(k, k);
        for (int i = 0; i < k; ++i) {
            const LaurentPoly& di = f.d.at(i, i);
            if (!di.is_unit()) throw InconsistencyError("invert: matrix not invertible over the ring");
            dinv.at(i, i) = LaurentPoly::monomial(-di.valuation());
        }
        return f.v * dinv * f.u;
    };
    PolyMatrix uinv = invert(s.u);
    PolyMatrix vinv = invert(s.v);
    PolyMatrix coords = vinv * uinv * s.d; // columns: xi for each pivot column

    // rows `non`, columns `piv` — the induced block A
    PolyMatrix a(n - r, r);
    for (int i = 0; i < n - r; ++i)
        for (int j = 0; j < r; ++j) a.at(i, j) = coords.at(non[i], piv[j]);
    for (int i = 0; i < r; ++i) // pivot rows of the coordinates must vanish
        for (int j = 0; j < r; ++j)
            if (!coords.at(piv[i], piv[j]).is_zero())
                throw InconsistencyError("decompose_two_step: image not inside kernel");

    SmithNormalForm sa = smith_normal_form(a);
    if (sa.rank != r) throw InconsistencyError("decompose_two_step: induced block lost rank");
    PolyMatrix uainv = invert(sa.u);

    // assemble basis change: columns [B V' | K U'^-1]
    TwoStepDecomposition out;
    out.basis_change = PolyMatrix(n, n);
    for (int l = 0; l < r; ++l)
        for (int i = 0; i < n; ++i) {
            LaurentPoly acc;
            for (int j = 0; j < r; ++j) acc = acc + s.v.at(i, piv[j]) * sa.v.at(j, l);
            out.basis_change.at(i, l) = acc;
        }
    for (int l = 0; l < n - r; ++l)
        for (int i = 0; i < n; ++i) {
            LaurentPoly acc;
            for (int j = 0; j < n - r; ++j) acc = acc + s.v.at(i, non[j]) * uainv.at(j, l);
            out.basis_change.at(i, r + l) = acc;
        }
    for (int l = 0; l < r; ++l) {
        LaurentPoly q = sa.d.at(l, l);
        out.pairs.emplace_back(l, r + l, q);
    }
    for (int l = r; l < n - r; ++l) out.free_indices.push_back(r + l);

    // exactness check: d * M = M * S
    PolyMatrix lhs = c.d * out.basis_change;
    PolyMatrix rhs = out.basis_change * out.two_step_matrix(n);
    if (!(lhs == rhs)) throw InconsistencyError("decompose_two_step: recomposition failed");
    return out;
}

// dim H(C (x) F_2 at t=1) = dim(H(C) (x) F_2) + dim Tor^1(H(C), F_2),
// both sides computed independently.
inline bool universal_coefficients_check(const LaurentComplex& c) {
    int lhs = c.rank - 2 * c.d.eval_at_one().rank();
    TwoStepDecomposition dec = decompose_two_step(c);
    int rhs = static_cast<int>(dec.free_indices.size());
    for (const auto& [b, cc, q] : dec.pairs) {
        (void)b; (void)cc;
        if (!q.eval_at_one()) rhs += 2; // tensor + Tor contribution
    }
    return lhs == rhs;
}

} // namespace khodet
