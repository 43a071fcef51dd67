#pragma once

// The unrolled complex of an A-infinity module over F_2[X]/(X^2): a finite
// matrix over F_2[Y] whose square is zero, with homology dimension taken
// over the fraction field F_2(Y) (rank there equals rank over the
// Laurent-series field).

#include <stdexcept>
#include <vector>

#include "ainf.hpp"
#include "poly_matrix.hpp"

namespace khodet {

struct UnrolledDifferential {
    int dim = 0;
    PolyMatrix matrix; // sum_j ops[j] Y^j, squares to zero
};

inline UnrolledDifferential unroll_module(const AinfModuleX& m) {
    if (!check_relations(m).empty())
        throw std::invalid_argument("unroll_module: module fails the A-infinity relations");
    UnrolledDifferential u;
    u.dim = m.dim;
    u.matrix = PolyMatrix(m.dim, m.dim);
    for (int j = 0; j < m.op_count(); ++j)
        u.matrix = u.matrix + PolyMatrix::from_f2(m.op(j), j);
    if (!(u.matrix * u.matrix).is_zero())
        throw InconsistencyError("unroll_module: matrix does not square to zero");
    return u;
}

inline int unrolled_homology_dim(const AinfModuleX& m) {
    UnrolledDifferential u = unroll_module(m);
    return m.dim - 2 * rational_rank(u.matrix);
}

inline bool is_unrolled_acyclic(const AinfModuleX& m) {
    return unrolled_homology_dim(m) == 0;
}

// F(Y) = sum_j f_j Y^j; satisfies F D_src = D_tgt F exactly
inline PolyMatrix unroll_morphism(const AinfMorphismX& f) {
    if (!check_morphism(f).empty())
        throw std::invalid_argument("unroll_morphism: morphism fails the relations");
    PolyMatrix F(f.target.dim, f.source.dim);
    for (int j = 0; j < f.map_count(); ++j)
        F = F + PolyMatrix::from_f2(f.map(j), j);
    PolyMatrix ds = unroll_module(f.source).matrix;
    PolyMatrix dt = unroll_module(f.target).matrix;
    if (!(F * ds == dt * F))
        throw InconsistencyError("unroll_morphism: chain-map identity failed");
    return F;
}

struct SpectralPageRanks {
    std::vector<std::pair<int, int>> ranks; // (page, rank of d_page), nonzero ranks only

    bool operator==(const SpectralPageRanks& o) const { return ranks == o.ranks; }
    int total_rank() const {
        int s = 0;
        for (auto& [r, k] : ranks) s += k;
        return s;
    }
};

// Pages of the Y-adic filtration spectral sequence of the unrolled complex.
// d_0 is the differential; each later page is computed by transferring the
// structure to homology and rotating the operation list down by one.
inline SpectralPageRanks spectral_page_ranks(const AinfModuleX& m, int max_page = -1) {
    if (!check_relations(m).empty())
        throw std::invalid_argument("spectral_page_ranks: invalid module");
    if (max_page < 0) max_page = m.dim + 1;
    SpectralPageRanks out;
    int r0 = m.op(0).rank();
    if (r0) out.ranks.emplace_back(0, r0);
    AinfModuleX cur = transfer_to_homology(m).module; // ops[0] == 0 now
    for (int page = 1; page <= max_page; ++page) {
        if (cur.dim == 0 || cur.op_count() <= 1) break; // all later differentials vanish
        // rotate: drop the zero differential, shift Y-degrees down by one
        std::vector<F2Matrix> shifted(cur.ops.begin() + 1, cur.ops.end());
        AinfModuleX rot(cur.dim, std::move(shifted));
        int rk = rot.op(0).rank();
        if (rk) out.ranks.emplace_back(page, rk);
        cur = transfer_to_homology(rot).module;
    }
    return out;
}

} // namespace khodet
