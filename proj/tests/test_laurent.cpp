#include "doctest.h"

#include <random>

#include "khodet/generators.hpp"
#include "khodet/laurent.hpp"

using namespace khodet;

namespace {

// Independent binomial-parity oracle: 2-adic valuation of the falling
// factorial m(m-1)...(m-n+1) against that of n!.
bool binom_mod2_oracle(long long m, int n) {
    if (n == 0) return true;
    long long v_num = 0;
    for (int i = 0; i < n; ++i) {
        long long f = m - i;
        if (f == 0) return false;
        unsigned long long a = f < 0 ? -f : f;
        while ((a & 1) == 0) { ++v_num; a >>= 1; }
    }
    long long v_den = 0;
    for (long long k = 2; k <= n; ++k) {
        unsigned long long a = k;
        while ((a & 1) == 0) { ++v_den; a >>= 1; }
    }
    return v_num == v_den;
}

LaurentPoly t_pow(int e) { return LaurentPoly::monomial(e); }

} // namespace

TEST_CASE("binom_mod2 matches spec examples") {
    CHECK(binom_mod2(3, 2) == true);   // C(3,2) = 3
    CHECK(binom_mod2(2, 1) == false);  // C(2,1) = 2
    CHECK(binom_mod2(-1, 5) == true);  // C(-1,k) = (-1)^k
    CHECK_THROWS_AS(binom_mod2(3, -1), std::invalid_argument);
}

TEST_CASE("binom_mod2 agrees with the falling-factorial oracle") {
    for (long long m = -16; m <= 16; ++m)
        for (int n = 0; n <= 16; ++n)
            CHECK(binom_mod2(m, n) == binom_mod2_oracle(m, n));
}

TEST_CASE("hasse derivative examples") {
    CHECK(t_pow(3).hasse(2) == t_pow(1));
    CHECK(t_pow(2).hasse(1).is_zero());
    CHECK(t_pow(-1).hasse(2) == t_pow(-3));
}

TEST_CASE("hasse derivative matches monomial oracle on random polys") {
    Rng rng(0x9a0331);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = random_laurent(rng, 8, -10, 10);
        int n = rand_int(rng, 0, 6);
        LaurentPoly expect;
        for (int e : p.exponents())
            if (binom_mod2_oracle(e, n)) expect = expect + t_pow(e - n);
        CHECK(p.hasse(n) == expect);
    }
}

TEST_CASE("hasse Leibniz rule") {
    Rng rng(0x1f2e3d);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly f = random_laurent(rng, 6, -8, 8);
        LaurentPoly g = random_laurent(rng, 6, -8, 8);
        for (int n = 0; n <= 8; ++n) {
            LaurentPoly lhs = (f * g).hasse(n);
            LaurentPoly rhs;
            for (int i = 0; i <= n; ++i) rhs = rhs + f.hasse(i) * g.hasse(n - i);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("hasse vanishing: some derivative of a nonzero poly is nonzero at 1") {
    Rng rng(0x77aa01);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = random_nonzero_laurent(rng, 10, -9, 9);
        int w = p.width();
        bool found = false;
        for (int i = 0; i <= w && !found; ++i)
            if (p.hasse(i).eval_at_one()) found = true;
        CHECK(found);
    }
}

TEST_CASE("binomial generating-function identity") {
    // coefficient of s^k in (1+s)^a (1+s+s^2+...)^b mod 2 equals C(a-b, k) mod 2
    constexpr int kmax = 12;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            uint32_t series = 1; // truncated to degree kmax, bit k = coeff of s^k
            uint32_t mask = (1u << (kmax + 1)) - 1;
            for (int i = 0; i < a; ++i) series = (series ^ (series << 1)) & mask;
            uint32_t geom = mask; // 1 + s + s^2 + ...
            for (int i = 0; i < b; ++i) {
                uint32_t prod = 0;
                for (int k = 0; k <= kmax; ++k)
                    if ((series >> k) & 1) prod ^= (geom << k) & mask;
                series = prod;
            }
            for (int k = 0; k <= kmax; ++k)
                CHECK(((series >> k) & 1) == binom_mod2(a - b, k));
        }
}

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly p = LaurentPoly::from_exponents({-2, 0, 3});
    CHECK(p.support_size() == 3);
    CHECK(p.valuation() == -2);
    CHECK(p.degree() == 3);
    CHECK((p + p).is_zero());
    LaurentPoly q = LaurentPoly::from_exponents({0, 1});
    CHECK((p * q) == LaurentPoly::from_exponents({-2, -1, 0, 1, 3, 4}));
    CHECK(p.eval_at_one());
    CHECK(!q.eval_at_one());
    CHECK(q.str() == "1+t");
}

TEST_CASE("divmod and gcd over the Laurent ring") {
    Rng rng(0xbead);
    for (int trial = 0; trial < 80; ++trial) {
        LaurentPoly a = random_laurent(rng, 6, -6, 6);
        LaurentPoly d = random_nonzero_laurent(rng, 5, -4, 4);
        LaurentPoly q, r;
        a.divmod(d, q, r);
        CHECK(a == q * d + r);
        if (!r.is_zero()) CHECK(r.width() < d.width());
        LaurentPoly g = gcd(a, d);
        if (!a.is_zero()) CHECK(a.divisible_by(g));
        CHECK(d.divisible_by(g));
    }
}

TEST_CASE("rational function arithmetic is exact") {
    Rng rng(0x5eed);
    LaurentPoly one = LaurentPoly::one();
    for (int trial = 0; trial < 40; ++trial) {
        RationalFn a(random_laurent(rng, 4, -3, 3), random_nonzero_laurent(rng, 4, -3, 3));
        RationalFn b(random_laurent(rng, 4, -3, 3), random_nonzero_laurent(rng, 4, -3, 3));
        CHECK((a + b) == (b + a));
        CHECK((a + a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inv()) == RationalFn(one, one));
    }
}
