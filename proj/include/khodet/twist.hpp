#pragma once

// From free complexes over F_2[t,t^-1] to A-infinity modules over
// F_2[X]/(X^2): the t=1 functor (operations are Hasse derivatives of the
// differential evaluated at 1), the canonical form of such modules, and the
// Koszul Tor model with its explicit quasi-isomorphism.

#include <string>
#include <vector>

#include "homalg.hpp"
#include "unroll.hpp"

namespace khodet {

inline AinfModuleX t_one_module(const LaurentComplex& c) {
    std::vector<F2Matrix> ops;
    // Hasse derivatives vanish once the order exceeds the entry width
    int bound = 0;
    for (int i = 0; i < c.d.rows(); ++i)
        for (int j = 0; j < c.d.cols(); ++j)
            if (!c.d.at(i, j).is_zero()) bound = std::max(bound, c.d.at(i, j).width());
    for (int n = 0; n <= bound; ++n) ops.push_back(c.d.hasse(n).eval_at_one());
    AinfModuleX m(c.rank, std::move(ops));
    if (!check_relations(m).empty())
        throw InconsistencyError("t_one_module: induced module fails the relations");
    return m;
}

inline AinfMorphismX t_one_morphism(const PolyMatrix& f, const LaurentComplex& c,
                                    const LaurentComplex& e) {
    if (f.rows() != e.rank || f.cols() != c.rank)
        throw std::invalid_argument("t_one_morphism: shape mismatch");
    if (!(f * c.d == e.d * f))
        throw std::invalid_argument("t_one_morphism: not a chain map");
    int bound = 0;
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
            if (!f.at(i, j).is_zero()) bound = std::max(bound, f.at(i, j).width());
    std::vector<F2Matrix> maps;
    for (int n = 0; n <= bound; ++n) maps.push_back(f.hasse(n).eval_at_one());
    AinfMorphismX out(t_one_module(c), t_one_module(e), std::move(maps));
    if (!check_morphism(out).empty())
        throw InconsistencyError("t_one_morphism: induced morphism fails the relations");
    return out;
}

struct CanonicalForm {
    int free_rank = 0;                     // m
    std::vector<LaurentPoly> torsion;      // nonunit invariant factors, valuation-0
    std::vector<int> vanishing_at_one;     // indices i with torsion[i](1) = 0
};

inline CanonicalForm canonical_form(const LaurentComplex& c) {
    TwoStepDecomposition dec = decompose_two_step(c);
    CanonicalForm cf;
    cf.free_rank = static_cast<int>(dec.free_indices.size());
    for (const auto& [b, cc, q] : dec.pairs) {
        (void)b; (void)cc;
        if (q.is_unit()) continue;
        if (!q.eval_at_one()) cf.vanishing_at_one.push_back(static_cast<int>(cf.torsion.size()));
        cf.torsion.push_back(q.unit_normalized());
    }
    return cf;
}

// F_2^m trivial summand plus, for each torsion p with p(1) = 0, a pair
// (z, w) with mu_{1+n}(z, X, ..., X) = (D^n p)(1) w.
inline AinfModuleX build_canonical_module(const CanonicalForm& cf) {
    int k = static_cast<int>(cf.vanishing_at_one.size());
    int dim = cf.free_rank + 2 * k;
    std::vector<F2Matrix> ops;
    for (int pi = 0; pi < k; ++pi) {
        const LaurentPoly& p = cf.torsion[cf.vanishing_at_one[pi]];
        for (int n = 1; n <= p.width(); ++n) {
            if (!p.hasse(n).eval_at_one()) continue;
            while (static_cast<int>(ops.size()) <= n) ops.emplace_back(dim, dim);
            int z = cf.free_rank + 2 * pi, w = z + 1;
            ops[n].set(w, z, true);
        }
    }
    AinfModuleX m(dim, std::move(ops));
    if (!check_relations(m).empty())
        throw InconsistencyError("build_canonical_module: relations fail");
    return m;
}

struct Report {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Compare the homotopy transfer of the t=1 module against the canonical
// module through every quasi-isomorphism invariant available here.
inline Report verify_twist_theorem(const LaurentComplex& c) {
    Report rep;
    AinfModuleX m1 = transfer_to_homology(t_one_module(c)).module;
    CanonicalForm cf = canonical_form(c);
    AinfModuleX m2 = build_canonical_module(cf);
    if (m1.dim != m2.dim)
        rep.failures.push_back("dim mismatch: transferred " + std::to_string(m1.dim) +
                               " vs canonical " + std::to_string(m2.dim));
    int u1 = unrolled_homology_dim(m1);
    int u2 = unrolled_homology_dim(m2);
    if (u1 != u2 || u1 != cf.free_rank)
        rep.failures.push_back("unrolled dims: transferred " + std::to_string(u1) +
                               ", canonical " + std::to_string(u2) + ", free rank " +
                               std::to_string(cf.free_rank));
    if (!(spectral_page_ranks(m1) == spectral_page_ranks(m2)))
        rep.failures.push_back("spectral page ranks differ");
    return rep;
}

struct KoszulMorphismData {
    LaurentPoly p;
    std::vector<LaurentPoly> q; // q[0] = q_1, ..., until zero (exclusive)
};

// q_1 = p/(1-t), q_{n+1} = (q_n(1) - q_n(t))/(1-t);  q_n(1) = (D^n p)(1).
inline KoszulMorphismData koszul_morphism(const LaurentPoly& p) {
    if (p.is_zero() || p.eval_at_one())
        throw std::invalid_argument("koszul_morphism: requires p != 0 and p(1) = 0");
    LaurentPoly one_minus_t = LaurentPoly::from_exponents({0, 1});
    KoszulMorphismData out;
    out.p = p;
    if (!p.divisible_by(one_minus_t))
        throw InconsistencyError("koszul_morphism: p(1)=0 but (1-t) does not divide p");
    LaurentPoly q = p.exact_div(one_minus_t);
    int n = 1;
    while (!q.is_zero()) {
        out.q.push_back(q);
        if (q.eval_at_one() != p.hasse(n).eval_at_one())
            throw InconsistencyError("koszul_morphism: q_n(1) != (D^n p)(1)");
        LaurentPoly num = q.eval_at_one() ? q + LaurentPoly::one() : q;
        if (!num.is_zero() && !num.divisible_by(one_minus_t))
            throw InconsistencyError("koszul_morphism: recursion step not divisible by 1-t");
        q = num.is_zero() ? num : num.exact_div(one_minus_t);
        ++n;
    }
    return out;
}

namespace detail {

// Tor model of a two-step summand b --p--> c: the total complex of
// C --(1-t)--> C on basis (b, c, Xb, Xc), with X the shift.
inline PolyMatrix tor_model_differential(const LaurentPoly& p) {
    LaurentPoly omt = LaurentPoly::from_exponents({0, 1}); // 1 + t = 1 - t
    PolyMatrix d(4, 4);
    d.at(1, 0) = p;        // b -> p c
    d.at(2, 0) = omt;      // b -> (1-t) Xb
    d.at(3, 1) = omt;      // c -> (1-t) Xc
    d.at(3, 2) = p;        // Xb -> p Xc
    return d;
}

inline PolyMatrix tor_model_shift() {
    PolyMatrix x(4, 4);
    x.at(2, 0) = LaurentPoly::one(); // X b = Xb
    x.at(3, 1) = LaurentPoly::one(); // X c = Xc
    return x;
}

} // namespace detail

// Per torsion summand with p(1) = 0: build the morphism
//   f_1(c) = Xc,  f_1(b) = Xb + q_1 c,  f_{1+n}(b) = q_{n+1} c
// from the t=1 module of the summand to the Tor model, verify the morphism
// relations symbolically over F_2[t,t^-1], and verify f_1 is a
// quasi-isomorphism using the closed-form homology of the model.
inline Report verify_koszul(const LaurentComplex& c) {
    Report rep;
    TwoStepDecomposition dec = decompose_two_step(c);
    LaurentPoly omt = LaurentPoly::from_exponents({0, 1});

    for (size_t s = 0; s < dec.pairs.size(); ++s) {
        const LaurentPoly p = std::get<2>(dec.pairs[s]).unit_normalized();
        std::string tag = "summand " + std::to_string(s) + " (p = " + p.str() + "): ";
        // summand complex b --p--> c
        PolyMatrix sd(2, 2);
        sd.at(1, 0) = p;
        LaurentComplex summand(sd);
        AinfModuleX t1 = t_one_module(summand);
        PolyMatrix e = detail::tor_model_differential(p);
        PolyMatrix x = detail::tor_model_shift();

        int t1_hom = t1.dim - 2 * t1.op(0).rank();
        if (p.eval_at_one()) {
            // p(1) != 0: both sides acyclic, nothing to map
            if (t1_hom != 0) rep.failures.push_back(tag + "t=1 side not acyclic");
            SmithNormalForm se = smith_normal_form(e);
            int edim = 0;
            for (const auto& q : se.diagonal())
                if (!q.is_zero() && !q.is_unit()) edim += q.unit_normalized().width();
            if (4 - 2 * se.rank != 0 || edim != 0)
                rep.failures.push_back(tag + "Tor model not acyclic");
            continue;
        }

        KoszulMorphismData kd = koszul_morphism(p);
        // morphism components as 4 x 2 polynomial matrices (columns b, c)
        auto f_comp = [&](int n) {
            PolyMatrix f(4, 2);
            if (n == 0) {
                f.at(2, 0) = LaurentPoly::one();               // f_1(b) = Xb + q_1 c
                if (!kd.q.empty()) f.at(1, 0) = kd.q[0];
                f.at(3, 1) = LaurentPoly::one();               // f_1(c) = Xc
            } else if (n < static_cast<int>(kd.q.size())) {
                f.at(1, 0) = kd.q[n];                          // f_{1+n}(b) = q_{n+1} c
            }
            return f;
        };
        // relations: for all n:  e f_n + x f_{n-1} + sum_{i+j=n} f_i (m_j over F_2 -> R) = 0
        int top = static_cast<int>(kd.q.size()) + t1.op_count() + 2;
        for (int n = 0; n <= top; ++n) {
            PolyMatrix acc = e * f_comp(n);
            if (n >= 1) acc = acc + x * f_comp(n - 1);
            for (int j = 0; j <= n; ++j)
                acc = acc + f_comp(n - j) * PolyMatrix::from_f2(t1.op(j));
            if (!acc.is_zero()) {
                rep.failures.push_back(tag + "morphism relation fails at n = " + std::to_string(n));
                break;
            }
        }
        // quasi-isomorphism: H(t=1 side) is 2-dimensional; H(Tor model) must
        // be 2-dimensional too, and f_1 must inject on homology.
        if (t1_hom != 2) rep.failures.push_back(tag + "t=1 homology not 2-dimensional");
        TwoStepDecomposition de = decompose_two_step(LaurentComplex(e));
        int edim = 0;
        for (const auto& [bi, ci, q] : de.pairs) {
            (void)bi; (void)ci;
            if (!q.is_unit()) edim += q.width();
        }
        if (!de.free_indices.empty())
            rep.failures.push_back(tag + "Tor model has unexpected free summand");
        if (edim != 2) {
            rep.failures.push_back(tag + "Tor model homology dimension " + std::to_string(edim));
            continue;
        }
        // induced map on homology: express f_1 columns in the decomposition
        // basis; a cycle has no b'-coordinates, and its class in (+) R/(q_i)
        // is the c'-coordinate vector.  F_2-injectivity of two classes means
        // col0, col1 and col0+col1 are all nonzero mod the q_i.
        SmithNormalForm sbc = smith_normal_form(de.basis_change);
        PolyMatrix bc_inv = [&] {
            const int k = 4;
            PolyMatrix dinv(k, k);
            for (int i = 0; i < k; ++i) {
                const LaurentPoly& di = sbc.d.at(i, i);
                if (!di.is_unit()) throw InconsistencyError("verify_koszul: basis change singular");
                dinv.at(i, i) = LaurentPoly::monomial(-di.valuation());
            }
            return sbc.v * dinv * sbc.u;
        }();
        PolyMatrix coords = bc_inv * f_comp(0);
        bool cycle_ok = true;
        auto class_is_zero = [&](bool c0, bool c1) { // zero class of col combo
            for (const auto& [bi, ci, q] : de.pairs) {
                LaurentPoly v;
                if (c0) v = v + coords.at(ci, 0);
                if (c1) v = v + coords.at(ci, 1);
                if (!v.is_zero() && !v.divisible_by(q)) return false;
            }
            return true;
        };
        for (const auto& [bi, ci, q] : de.pairs) {
            (void)ci; (void)q;
            if (!coords.at(bi, 0).is_zero() || !coords.at(bi, 1).is_zero()) cycle_ok = false;
        }
        if (!cycle_ok) {
            rep.failures.push_back(tag + "f_1 image is not a cycle");
            continue;
        }
        if (class_is_zero(true, false) || class_is_zero(false, true) || class_is_zero(true, true))
            rep.failures.push_back(tag + "f_1 not injective on homology");
    }

    if (!dec.free_indices.empty()) {
        // d = 0 on a free summand; C^{t=1} = F_2 while the Tor model is
        // R --(1-t)--> R with homology R/(1-t) = F_2
        PolyMatrix e(2, 2);
        e.at(1, 0) = omt;
        TwoStepDecomposition de = decompose_two_step(LaurentComplex(e));
        if (de.pairs.size() != 1 || !(std::get<2>(de.pairs[0]).unit_normalized() == omt))
            rep.failures.push_back("free summand: Tor model homology is not F_2");
    }
    return rep;
}

} // namespace khodet
