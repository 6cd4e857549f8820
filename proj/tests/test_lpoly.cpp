#include "qsc/lpoly.hpp"

#include <doctest.h>

#include <random>

using namespace qsc;

namespace {

std::mt19937 rng(12345);

LaurentPoly random_poly(int terms, int32_t lo = -3, int32_t hi = 3) {
    std::uniform_int_distribution<int32_t> ed(lo, hi);
    std::uniform_int_distribution<int> cd(-5, 5);
    std::vector<LaurentPoly::Term> ts;
    for (int i = 0; i < terms; ++i) {
        Expo<4> e{ed(rng), ed(rng), ed(rng), ed(rng)};
        ts.emplace_back(e, Int(cd(rng)));
    }
    return LaurentPoly::from_terms(std::move(ts));
}

} // namespace

TEST_CASE("construction and canonical printing") {
    LaurentPoly p = LaurentPoly::variable(VAR_Q, 2);
    p.add_scaled(LaurentPoly::variable(VAR_A, -1), Int(3));
    CHECK(p.to_string() == "q^2 + 3*a^-1");
    CHECK(LaurentPoly{}.to_string() == "0");
    CHECK(LaurentPoly::constant(-7).to_string() == "-7");
}

TEST_CASE("like terms merge and cancel") {
    LaurentPoly p = LaurentPoly::variable(VAR_B);
    p.add_scaled(LaurentPoly::variable(VAR_B), Int(-1));
    CHECK(p.is_zero());
}

TEST_CASE("ring axioms on random triples") {
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPoly x = random_poly(6), y = random_poly(6), z = random_poly(6);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x - x == LaurentPoly{});
    }
}

TEST_CASE("binomial multiply agrees with general multiply") {
    for (int trial = 0; trial < 10; ++trial) {
        LaurentPoly p = random_poly(8);
        Expo<4> e{1, -1, 0, 2};
        LaurentPoly fast(p);
        fast.mul_one_minus(e);
        LaurentPoly binom = LaurentPoly::constant(1) - LaurentPoly::monomial(e);
        CHECK(fast == p * binom);
    }
}

TEST_CASE("powers") {
    LaurentPoly p = LaurentPoly::constant(1) + LaurentPoly::variable(VAR_Q);
    CHECK(p.pow(0) == LaurentPoly::constant(1));
    CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("q-bracket as a Laurent polynomial") {
    CHECK(bracket_laurent(1) == LaurentPoly::constant(1));
    CHECK(bracket_laurent(3).to_string() == "q^2 + q + 1");
    CHECK(bracket_laurent(-1).to_string() == "-q^-1");
    CHECK(bracket_laurent(0).is_zero());
    // (1 - q^x) = [x] (1 - q) for negative x too
    for (long x : {-5L, -2L, 7L}) {
        LaurentPoly lhs = LaurentPoly::constant(1) -
                          LaurentPoly::variable(VAR_Q, static_cast<int32_t>(x));
        LaurentPoly one_minus_q = LaurentPoly::constant(1) - LaurentPoly::variable(VAR_Q);
        CHECK(lhs == bracket_laurent(x) * one_minus_q);
    }
}

TEST_CASE("unit clearing normalizes the minimal exponent to zero") {
    LaurentPoly p = LaurentPoly::monomial(Expo<4>{-2, 1, 0, 0}, 3) +
                    LaurentPoly::monomial(Expo<4>{4, 0, -1, 0}, -1);
    auto [cleared, shift] = clear_q_units(p);
    CHECK(shift == -2);
    CHECK(cleared.min_exp(VAR_Q) == 0);
    LaurentPoly back(cleared);
    back.mul_monomial(Expo<4>{shift, 0, 0, 0});
    CHECK(back == p);
}

TEST_CASE("unit clearing preserves cyclotomic divisibility") {
    for (unsigned n = 2; n <= 12; ++n) {
        // p = Phi_n * (random) shifted by a q-unit stays divisible
        const UniPoly& phi = cyclotomic(n);
        LaurentPoly phi4;
        for (int i = 0; i <= phi.degree(); ++i)
            phi4.add_scaled(LaurentPoly::variable(VAR_Q, i), phi.coeff(i));
        LaurentPoly p = phi4 * random_poly(5, 0, 3);
        p.mul_monomial(Expo<4>{-7, 0, 0, 0});
        auto [cleared, shift] = clear_q_units(p);
        auto [quot, rem] = divrem_by_unipoly_in_q(cleared, phi);
        CHECK(rem.is_zero());
    }
}

TEST_CASE("division by a monic univariate modulus reconstructs the dividend") {
    for (int trial = 0; trial < 10; ++trial) {
        LaurentPoly p = random_poly(10, 0, 6);
        for (unsigned s : {2u, 3u, 5u}) {
            const UniPoly& m = cyclotomic(s);
            auto [quot, rem] = divrem_by_unipoly_in_q(p, m);
            CHECK(rem.max_exp(VAR_Q) < m.degree());
            LaurentPoly mq;
            for (int i = 0; i <= m.degree(); ++i) {
                LaurentPoly sh(quot);
                sh.mul_monomial(Expo<4>{i, 0, 0, 0}, m.coeff(i));
                mq.add_scaled(sh, Int(1));
            }
            CHECK(mq + rem == p);
        }
    }
}

TEST_CASE("division flags negative q-exponents and non-monic moduli") {
    LaurentPoly p = LaurentPoly::variable(VAR_Q, -1);
    CHECK_THROWS_AS(divrem_by_unipoly_in_q(p, cyclotomic(3)), std::invalid_argument);
    UniPoly not_monic({Int(1), Int(2)});
    CHECK_THROWS_AS(divrem_by_unipoly_in_q(LaurentPoly::constant(1), not_monic),
                    std::invalid_argument);
}

TEST_CASE("a multivariate remainder witnesses non-divisibility") {
    // 1 - a q^5 is not divisible by Phi_5 even though 1 - q^5 is: the
    // remainder carries the parameter
    LaurentPoly p = LaurentPoly::constant(1) -
                    LaurentPoly::monomial(Expo<4>{5, 1, 0, 0});
    auto [quot, rem] = divrem_by_unipoly_in_q(p, cyclotomic(5));
    CHECK_FALSE(rem.is_zero());
    // oracle: reduce a-coefficients separately in Z[q]/Phi_5; the a-part
    // of the remainder must equal -(q^5 mod Phi_5) = -1 * (q^5 - (q^5-1) - ... )
    LaurentPoly pure = LaurentPoly::constant(1) -
                       LaurentPoly::variable(VAR_Q, 5);
    auto [q2, rem2] = divrem_by_unipoly_in_q(pure, cyclotomic(5));
    CHECK(rem2.is_zero());
}

TEST_CASE("substitution") {
    LaurentPoly p = LaurentPoly::variable(VAR_B, 2) + LaurentPoly::variable(VAR_Q);
    // b -> 1 + q
    LaurentPoly v = LaurentPoly::constant(1) + LaurentPoly::variable(VAR_Q);
    LaurentPoly got = p.substitute(VAR_B, v);
    LaurentPoly expect = v * v + LaurentPoly::variable(VAR_Q);
    CHECK(got == expect);

    // negative exponents need an invertible monomial value
    LaurentPoly neg = LaurentPoly::variable(VAR_B, -1);
    CHECK_THROWS_AS(neg.substitute(VAR_B, v), std::domain_error);
    LaurentPoly qcube = LaurentPoly::variable(VAR_Q, 3);
    CHECK(neg.substitute(VAR_B, qcube) == LaurentPoly::variable(VAR_Q, -3));
}

TEST_CASE("substitute then evaluate equals evaluate at the image") {
    for (int trial = 0; trial < 5; ++trial) {
        LaurentPoly p = random_poly(6, 0, 3);
        LaurentPoly v = LaurentPoly::constant(2) + LaurentPoly::variable(VAR_Q);
        std::array<Rat, 4> pt{Rat(2, 3), Rat(5), Rat(1, 7), Rat(-3, 2)};
        std::array<Rat, 4> pt_sub = pt;
        pt_sub[VAR_B] = Rat(2) + pt[VAR_Q];
        CHECK(p.substitute(VAR_B, v).evaluate(pt) == p.evaluate(pt_sub));
    }
}
