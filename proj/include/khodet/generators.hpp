#pragma once

// Seeded generators for random algebra objects: Laurent polynomials,
// invertible matrices, square-zero differentials, DG modules.  Everything is
// driven by a caller-owned mt19937_64 so runs are reproducible.

#include <random>
#include <vector>

#include "ainf.hpp"
#include "homalg.hpp"
#include "poly_matrix.hpp"
#include "twist.hpp"

namespace khodet {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) { // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline LaurentPoly random_laurent(Rng& rng, int max_support, int min_exp, int max_exp) {
    int s = rand_int(rng, 0, max_support);
    std::vector<int> exps;
    for (int i = 0; i < s; ++i) exps.push_back(rand_int(rng, min_exp, max_exp));
    return LaurentPoly::from_exponents(exps);
}

inline LaurentPoly random_nonzero_laurent(Rng& rng, int max_support, int min_exp, int max_exp) {
    for (;;) {
        LaurentPoly p = random_laurent(rng, max_support, min_exp, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline PolyMatrix random_poly_matrix(Rng& rng, int rows, int cols, int max_support = 3,
                                     int min_exp = -2, int max_exp = 2) {
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_laurent(rng, max_support, min_exp, max_exp);
    return m;
}

// invertible over F_2[t,t^-1]: product of elementary row operations
inline PolyMatrix random_invertible_poly_matrix(Rng& rng, int n, int ops = -1,
                                                int max_support = 2, int max_exp = 1) {
    if (ops < 0) ops = 2 * n;
    PolyMatrix p = PolyMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
        int kind = rand_int(rng, 0, 2);
        int i = rand_int(rng, 0, n - 1);
        int j = rand_int(rng, 0, n - 1);
        if (kind == 0 && i != j) { // row i += f row j
            LaurentPoly f = random_laurent(rng, max_support, -max_exp, max_exp);
            for (int c = 0; c < n; ++c) p.at(i, c) = p.at(i, c) + f * p.at(j, c);
        } else if (kind == 1) {    // row i *= t^e
            int e = rand_int(rng, -1, 1);
            for (int c = 0; c < n; ++c) p.at(i, c) = p.at(i, c).times_monomial(e);
        } else if (i != j) {       // swap
            for (int c = 0; c < n; ++c) std::swap(p.at(i, c), p.at(j, c));
        }
    }
    return p;
}

// square-zero differential over F_2[t,t^-1]: a random two-step normal form
// conjugated by a random invertible matrix (P d0 P^-1, built op by op so the
// inverse is exact)
inline LaurentComplex random_laurent_complex(Rng& rng, int rank, int max_support = 3,
                                             int max_exp = 2) {
    int npairs = rand_int(rng, 0, rank / 2);
    PolyMatrix d0(rank, rank);
    for (int i = 0; i < npairs; ++i) {
        LaurentPoly q = random_nonzero_laurent(rng, max_support, -max_exp, max_exp);
        d0.at(2 * i + 1, 2 * i) = q;
    }
    // conjugate by elementary operations, tracking the inverse action
    PolyMatrix d = d0;
    int ops = 2 * rank;
    for (int k = 0; k < ops; ++k) {
        int kind = rand_int(rng, 0, 2);
        int i = rand_int(rng, 0, rank - 1);
        int j = rand_int(rng, 0, rank - 1);
        if (kind == 0 && i != j) { // E d E^-1 with E = I + f e_ij; E^-1 = I + f e_ij (char 2)
            LaurentPoly f = random_laurent(rng, 2, -1, 1);
            for (int c = 0; c < rank; ++c) d.at(i, c) = d.at(i, c) + f * d.at(j, c);
            for (int r = 0; r < rank; ++r) d.at(r, j) = d.at(r, j) + f * d.at(r, i);
        } else if (kind == 1) {    // scale row i by t^e, column i by t^-e
            int e = rand_int(rng, -1, 1);
            for (int c = 0; c < rank; ++c) d.at(i, c) = d.at(i, c).times_monomial(e);
            for (int r = 0; r < rank; ++r) d.at(r, i) = d.at(r, i).times_monomial(-e);
        } else if (i != j) {       // swap rows and columns
            for (int c = 0; c < rank; ++c) std::swap(d.at(i, c), d.at(j, c));
            for (int r = 0; r < rank; ++r) std::swap(d.at(r, i), d.at(r, j));
        }
    }
    return LaurentComplex(d);
}

inline F2Matrix random_f2_matrix(Rng& rng, int rows, int cols, double density = 0.4) {
    F2Matrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (bit(rng)) m.set(i, j, true);
    return m;
}

inline F2Matrix random_invertible_f2(Rng& rng, int n) {
    F2Matrix p = F2Matrix::identity(n);
    for (int k = 0; k < 3 * n; ++k) {
        int i = rand_int(rng, 0, n - 1);
        int j = rand_int(rng, 0, n - 1);
        if (i == j) continue;
        if (rand_int(rng, 0, 1)) p.xor_row(i, j);
        else p.swap_rows(i, j);
    }
    return p;
}

// random DG module over F_2[X]/(X^2): direct sum of basic blocks conjugated
// by a random invertible F_2 matrix.  Blocks: trivial F_2; free rank-1
// module; acyclic two-step; two-step with d = X.
inline DGModuleX random_dg_module(Rng& rng, int max_dim) {
    std::vector<int> blocks;
    int dim = 0;
    while (dim < max_dim) {
        int b = rand_int(rng, 0, 3);
        int sz = b == 0 ? 1 : 2;
        if (dim + sz > max_dim) break;
        blocks.push_back(b);
        dim += sz;
    }
    if (dim == 0) { blocks.push_back(0); dim = 1; }
    F2Matrix d(dim, dim), x(dim, dim);
    int at = 0;
    for (int b : blocks) {
        switch (b) {
            case 0: at += 1; break;                          // trivial
            case 1: x.set(at + 1, at, true); at += 2; break; // free: Xe = f
            case 2: d.set(at + 1, at, true); at += 2; break; // acyclic: de = f
            case 3:                                          // de = f = Xe
                d.set(at + 1, at, true);
                x.set(at + 1, at, true);
                at += 2;
                break;
        }
    }
    F2Matrix p = random_invertible_f2(rng, dim);
    F2Matrix pinv = inverse(p);
    return DGModuleX(F2Complex(p * d * pinv), p * x * pinv);
}

// valid strictly unital A-infinity module with (usually) nontrivial higher
// operations: the t=1 module of a random Laurent complex
inline AinfModuleX random_ainf_module(Rng& rng, int max_rank) {
    int r = rand_int(rng, 1, max_rank);
    return t_one_module(random_laurent_complex(rng, r));
}

} // namespace khodet
