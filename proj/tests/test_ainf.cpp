#include "doctest.h"

#include "khodet/ainf.hpp"
#include "khodet/generators.hpp"
#include "khodet/unroll.hpp"

using namespace khodet;

TEST_CASE("check_relations: spec examples") {
    SUBCASE("promoted DG module") {
        Rng rng(0xaa01);
        for (int t = 0; t < 20; ++t)
            CHECK(check_relations(promote(random_dg_module(rng, 8))).empty());
    }
    SUBCASE("X acting by identity on one generator fails at n = 2") {
        AinfModuleX m(1, {F2Matrix(1, 1), F2Matrix::identity(1)});
        auto bad = check_relations(m);
        REQUIRE(!bad.empty());
        CHECK(bad.front() == 2);
    }
    SUBCASE("canonical two-generator module m_k(z) = w") {
        for (int k = 1; k <= 4; ++k) {
            std::vector<F2Matrix> ops(k + 1, F2Matrix(2, 2));
            ops[k].set(1, 0, true);
            CHECK(check_relations(AinfModuleX(2, ops)).empty());
        }
    }
}

TEST_CASE("check_morphism: identity passes, zero-with-f1 fails") {
    Rng rng(0xbb02);
    AinfModuleX m = random_ainf_module(rng, 6);
    CHECK(check_morphism(AinfMorphismX::identity(m)).empty());

    // dim-1 modules with zero differential and X acting by zero vs ...:
    // f_0 = 0, f_1 != 0 between modules with nonzero m_1 violates n = 2
    std::vector<F2Matrix> ops(2, F2Matrix(2, 2));
    ops[1].set(1, 0, true);
    AinfModuleX a(2, ops);
    AinfMorphismX f(a, a, {F2Matrix(2, 2), F2Matrix::identity(2)});
    CHECK(!check_morphism(f).empty());
}

TEST_CASE("composition: identity laws and associativity") {
    Rng rng(0xcc03);
    for (int trial = 0; trial < 25; ++trial) {
        AinfModuleX m = random_ainf_module(rng, 6);
        TransferResult tr = transfer_to_homology(m);
        const AinfMorphismX& f = tr.incl; // H -> M
        AinfMorphismX idm = AinfMorphismX::identity(m);
        AinfMorphismX idh = AinfMorphismX::identity(tr.module);
        CHECK(compose(idm, f).maps == f.maps);
        CHECK(compose(f, idh).maps == f.maps);
        // associativity on (f, id, id)
        CHECK(compose(compose(idm, idm), f).maps == compose(idm, compose(idm, f)).maps);
        // composite of valid morphisms passes the checker
        CHECK(check_morphism(compose(idm, f)).empty());
    }
}

TEST_CASE("transfer: spec examples") {
    SUBCASE("zero differential transfers to itself") {
        F2Matrix d(2, 2), x(2, 2);
        x.set(1, 0, true);
        AinfModuleX m = promote(DGModuleX{F2Complex(d), x});
        TransferResult tr = transfer_to_homology(m);
        CHECK(tr.module.dim == 2);
        CHECK(tr.module.ops == m.ops);
        CHECK(tr.incl.map(0) == F2Matrix::identity(2));
    }
    SUBCASE("acyclic two-step transfers to zero") {
        F2Matrix d(2, 2);
        d.set(1, 0, true);
        AinfModuleX m = promote(DGModuleX{F2Complex(d), F2Matrix(2, 2)});
        TransferResult tr = transfer_to_homology(m);
        CHECK(tr.module.dim == 0);
    }
}

TEST_CASE("transfer soundness and unrolled invariance on random DG modules") {
    Rng rng(0xdd04);
    for (int trial = 0; trial < 200; ++trial) {
        DGModuleX dg = random_dg_module(rng, 10);
        AinfModuleX m = promote(dg);
        TransferResult tr = transfer_to_homology(m);
        CHECK(check_relations(tr.module).empty());
        CHECK(check_morphism(tr.incl).empty());
        CHECK(unrolled_homology_dim(m) == unrolled_homology_dim(tr.module));
    }
}

TEST_CASE("transfer soundness on random honest A-infinity modules") {
    Rng rng(0xee05);
    for (int trial = 0; trial < 60; ++trial) {
        AinfModuleX m = random_ainf_module(rng, 7);
        TransferResult tr = transfer_to_homology(m);
        CHECK(check_relations(tr.module).empty());
        CHECK(check_morphism(tr.incl).empty());
        CHECK(unrolled_homology_dim(m) == unrolled_homology_dim(tr.module));
    }
}

TEST_CASE("promote rejects nothing valid and keeps relations") {
    F2Matrix d(1, 1), x(1, 1);
    AinfModuleX zero = promote(DGModuleX{F2Complex(d), x});
    CHECK(zero.op_count() == 0); // zero ops trimmed
    CHECK(check_relations(zero).empty());
}
