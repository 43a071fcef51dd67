#include "doctest.h"

#include "khodet/generators.hpp"
#include "khodet/unroll.hpp"

using namespace khodet;

namespace {

AinfModuleX free_rank1() {
    F2Matrix d(2, 2), x(2, 2);
    x.set(1, 0, true);
    return promote(DGModuleX{F2Complex(d), x});
}

AinfModuleX canonical_zw(int k) { // m_k(z) = w
    std::vector<F2Matrix> ops(k + 1, F2Matrix(2, 2));
    ops[k].set(1, 0, true);
    return AinfModuleX(2, ops);
}

} // namespace

TEST_CASE("unroll_module: spec examples") {
    SUBCASE("free module gives [[0,0],[Y,0]]") {
        UnrolledDifferential u = unroll_module(free_rank1());
        PolyMatrix expect(2, 2);
        expect.at(1, 0) = LaurentPoly::monomial(1);
        CHECK(u.matrix == expect);
    }
    SUBCASE("trivial module gives the 1x1 zero matrix") {
        AinfModuleX triv(1, {});
        CHECK(unroll_module(triv).matrix.is_zero());
    }
    SUBCASE("canonical module gives a single Y^k entry") {
        UnrolledDifferential u = unroll_module(canonical_zw(3));
        PolyMatrix expect(2, 2);
        expect.at(1, 0) = LaurentPoly::monomial(3);
        CHECK(u.matrix == expect);
    }
}

TEST_CASE("unrolled homology dimension: spec examples") {
    CHECK(unrolled_homology_dim(free_rank1()) == 0);
    CHECK(is_unrolled_acyclic(free_rank1()));
    AinfModuleX triv(3, {});
    CHECK(unrolled_homology_dim(triv) == 3);
    CHECK(!is_unrolled_acyclic(triv));
    CHECK(unrolled_homology_dim(canonical_zw(2)) == 0);
}

TEST_CASE("unroll functoriality") {
    Rng rng(0xf001);
    for (int trial = 0; trial < 30; ++trial) {
        AinfModuleX m = random_ainf_module(rng, 6);
        CHECK(unroll_morphism(AinfMorphismX::identity(m)) == PolyMatrix::identity(m.dim));
        TransferResult tr = transfer_to_homology(m);
        // unroll(g . f) = unroll(g) unroll(f); chain-map identity checked inside
        AinfMorphismX idm = AinfMorphismX::identity(m);
        PolyMatrix lhs = unroll_morphism(compose(idm, tr.incl));
        PolyMatrix rhs = unroll_morphism(idm) * unroll_morphism(tr.incl);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quasi-free modules have acyclic unrollings") {
    // complexes of free F2[X]/(X^2)-modules: d0 pairs free generators, then
    // conjugate by a random X-equivariant automorphism [[A,0],[B,A]]
    Rng rng(0xf002);
    for (int trial = 0; trial < 60; ++trial) {
        int r = rand_int(rng, 1, 6); // free rank; basis e_0..e_{r-1}, f_i = X e_i
        int n = 2 * r;
        F2Matrix x(n, n);
        for (int i = 0; i < r; ++i) x.set(r + i, i, true);
        F2Matrix d0(n, n);
        for (int i = 0; i + 1 < r; i += 2) {
            int c0 = rand_int(rng, 0, 1), c1 = rand_int(rng, 0, 1);
            if (c0) { d0.set(i + 1, i, true); d0.set(r + i + 1, r + i, true); } // e->e, f->f
            if (c1) d0.set(r + i + 1, i, true);                                // e->f
        }
        F2Matrix a = random_invertible_f2(rng, r);
        F2Matrix b = random_f2_matrix(rng, r, r);
        F2Matrix p(n, n), ainv = inverse(a);
        F2Matrix binv = ainv * b * ainv; // inverse of [[A,0],[B,A]] is [[A^-1,0],[A^-1 B A^-1, A^-1]]
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (a.get(i, j)) { p.set(i, j, true); p.set(r + i, r + j, true); }
                if (b.get(i, j)) p.set(r + i, j, true);
            }
        F2Matrix pinv(n, n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (ainv.get(i, j)) { pinv.set(i, j, true); pinv.set(r + i, r + j, true); }
                if (binv.get(i, j)) pinv.set(r + i, j, true);
            }
        REQUIRE(p * pinv == F2Matrix::identity(n));
        DGModuleX dg{F2Complex(p * d0 * pinv), p * x * pinv};
        CHECK(is_unrolled_acyclic(promote(dg)));
    }
}

TEST_CASE("spectral page ranks: spec examples") {
    SUBCASE("zero differential, X of rank rho") {
        F2Matrix d(4, 4), x(4, 4);
        x.set(1, 0, true); // rho = 1 on dim 4
        SpectralPageRanks s = spectral_page_ranks(promote(DGModuleX{F2Complex(d), x}));
        REQUIRE(s.ranks.size() == 1);
        CHECK(s.ranks[0] == std::pair<int, int>{1, 1});
    }
    SUBCASE("canonical module: rank 1 at page k") {
        for (int k = 1; k <= 4; ++k) {
            SpectralPageRanks s = spectral_page_ranks(canonical_zw(k));
            REQUIRE(s.ranks.size() == 1);
            CHECK(s.ranks[0] == std::pair<int, int>{k, 1});
        }
    }
    SUBCASE("t_one module of a two-step complex with q = (1+t)^2 jumps at page 2") {
        PolyMatrix m(2, 2);
        m.at(1, 0) = LaurentPoly::from_exponents({0, 2}); // (1+t)^2
        AinfModuleX t1 = t_one_module(LaurentComplex{m});
        SpectralPageRanks s = spectral_page_ranks(t1);
        REQUIRE(s.ranks.size() == 1);
        CHECK(s.ranks[0] == std::pair<int, int>{2, 1});
    }
}

TEST_CASE("spectral reconciliation on 200 random modules") {
    Rng rng(0xf003);
    for (int trial = 0; trial < 200; ++trial) {
        AinfModuleX m = trial % 2 ? random_ainf_module(rng, 6)
                                  : promote(random_dg_module(rng, 8));
        SpectralPageRanks s = spectral_page_ranks(m);
        CHECK(m.dim - 2 * s.total_rank() == unrolled_homology_dim(m));
    }
}
