#include "qsc/factored.hpp"

#include <doctest.h>

using namespace qsc;

namespace {

Expo<4> qexp(int32_t q, int32_t a = 0, int32_t b = 0, int32_t c = 0) {
    return Expo<4>{q, a, b, c};
}

} // namespace

TEST_CASE("pochhammer expansion, pure q") {
    // (q; q^3)_2 = (1 - q)(1 - q^4) = 1 - q - q^4 + q^5
    FactoredProduct p = FactoredProduct::pochhammer(qexp(1), 3, 2);
    CHECK(p.expand().to_string() == "q^5 - q^4 - q + 1");
    CHECK(p.atom_count() == 2);
    CHECK(FactoredProduct::one().expand() == LaurentPoly::constant(1));
}

TEST_CASE("atom canonicalization moves units and signs out") {
    // 1 - q^2/a = -(1/a) q^2 (1 - a q^{-2}) canonicalized on the a-slot
    FactoredProduct p;
    p.mul_atom(qexp(2, -1));
    CHECK(p.sign() == -1);
    LaurentPoly direct = LaurentPoly::constant(1) - LaurentPoly::monomial(qexp(2, -1));
    CHECK(p.expand() == direct);
    CHECK_THROWS_AS(p.mul_atom(qexp(0)), std::invalid_argument);
}

TEST_CASE("pochhammer recurrence at the factored level") {
    // (x; q^d)_{k+1} = (x; q^d)_k * (1 - x q^{dk})
    Expo<4> base = qexp(1, 1); // a q
    for (unsigned k = 0; k < 5; ++k) {
        FactoredProduct lhs = FactoredProduct::pochhammer(base, 3, k + 1);
        FactoredProduct rhs = FactoredProduct::pochhammer(base, 3, k);
        Expo<4> last = base;
        last[VAR_Q] += static_cast<int32_t>(3 * k);
        rhs.mul_atom(last);
        CHECK(lhs == rhs);
        CHECK(lhs.expand() == rhs.expand());
    }
}

TEST_CASE("exact factorwise quotient") {
    FactoredProduct num = FactoredProduct::pochhammer(qexp(3), 3, 4);
    FactoredProduct den = FactoredProduct::pochhammer(qexp(3), 3, 2);
    FactoredProduct quot = FactoredProduct::divide_exact(num, den);
    CHECK(quot * den == num);
    CHECK(quot.expand() * den.expand() == num.expand());
    CHECK_THROWS_AS(FactoredProduct::divide_exact(den, num), std::domain_error);
}

TEST_CASE("atomwise common part divides both factors exactly") {
    FactoredProduct x = FactoredProduct::pochhammer(qexp(3), 3, 4) *
                        FactoredProduct::pochhammer(qexp(1, 1), 3, 2);
    FactoredProduct y = FactoredProduct::pochhammer(qexp(3), 3, 2) *
                        FactoredProduct::pochhammer(qexp(2, 0, 1), 3, 3);
    FactoredProduct g = FactoredProduct::common_atoms(x, y);
    CHECK(g == FactoredProduct::pochhammer(qexp(3), 3, 2));
    CHECK(FactoredProduct::divide_exact(x, g) * g == x);
    CHECK(FactoredProduct::divide_exact(y, g) * g == y);
    CHECK(FactoredProduct::common_atoms(g, FactoredProduct::one()) ==
          FactoredProduct::one());
}

TEST_CASE("expansion agrees with factor-by-factor multiply") {
    FactoredProduct p = FactoredProduct::pochhammer(qexp(1, 1), 3, 3) *
                        FactoredProduct::pochhammer(qexp(3, 0, -1), 3, 2);
    CHECK(multiplied(p, LaurentPoly::constant(1)) == p.expand());
    LaurentPoly seed = LaurentPoly::variable(VAR_C) + LaurentPoly::constant(2);
    CHECK(multiplied(p, seed) == p.expand() * seed);
}

TEST_CASE("structural cyclotomic coprimality matches univariate gcd") {
    // pure-q products: certificate result must agree with polynomial fact
    for (unsigned n = 2; n <= 12; ++n) {
        for (unsigned delta = 1; delta <= 14; ++delta) {
            AtomT<4> at{qexp(static_cast<int32_t>(delta))};
            bool certified = atom_coprime_to_cyclotomic(at, n);
            // Phi_n | 1 - q^delta iff n | delta
            LaurentPoly atom = LaurentPoly::constant(1) -
                               LaurentPoly::variable(VAR_Q, static_cast<int32_t>(delta));
            auto [quot, rem] = divrem_by_unipoly_in_q(atom, cyclotomic(n));
            CHECK(certified == !rem.is_zero());
        }
    }
    // any parameter exponent certifies coprimality
    CHECK(atom_coprime_to_cyclotomic(AtomT<4>{qexp(6, 1)}, 3));
    CHECK(atom_coprime_to_cyclotomic(AtomT<4>{qexp(0, 0, 0, 1)}, 2));
}

TEST_CASE("cyclotomic multiplicity counts exactly the shared pure-q atoms") {
    FactoredProduct p = FactoredProduct::pochhammer(qexp(3), 3, 3); // (q^3;q^3)_3
    // atoms 1-q^3, 1-q^6, 1-q^9
    CHECK(p.cyclotomic_multiplicity(3) == 3);
    CHECK(p.cyclotomic_multiplicity(2) == 1);  // only 1-q^6
    CHECK(p.cyclotomic_multiplicity(9) == 1);  // only 1-q^9
    CHECK(p.cyclotomic_multiplicity(5) == 0);
    CHECK(p.coprime_to_cyclotomic(5));
    CHECK_FALSE(p.coprime_to_cyclotomic(2));

    // multiplicity is exact: dividing the expansion that many times works,
    // one more time leaves a remainder
    for (unsigned s : {2u, 3u, 9u}) {
        LaurentPoly cur = p.expand();
        unsigned v = p.cyclotomic_multiplicity(s);
        for (unsigned i = 0; i < v; ++i) {
            auto [q, rem] = divrem_by_unipoly_in_q(cur, cyclotomic(s));
            REQUIRE(rem.is_zero());
            cur = std::move(q);
        }
        auto [q, rem] = divrem_by_unipoly_in_q(cur, cyclotomic(s));
        CHECK_FALSE(rem.is_zero());
    }
}

TEST_CASE("coprimality against c - q^E") {
    CHECK(atom_coprime_to_c_minus_q_power(AtomT<4>{qexp(0, 1, 0, 1)}, 4));
    // 1 - c q^{-4} vanishes at c = q^4
    CHECK_FALSE(atom_coprime_to_c_minus_q_power(AtomT<4>{qexp(-4, 0, 0, 1)}, 4));
    CHECK(atom_coprime_to_c_minus_q_power(AtomT<4>{qexp(-3, 0, 0, 1)}, 4));
    FactoredProduct p;
    p.mul_atom(qexp(4, 0, 0, -1)); // 1 - q^4/c, also vanishes at c = q^4
    CHECK_FALSE(p.coprime_to_c_minus_q_power(4));
    CHECK(p.coprime_to_c_minus_q_power(5));
}

TEST_CASE("printing") {
    FactoredProduct p = FactoredProduct::pochhammer(qexp(1), 3, 1);
    CHECK(p.to_string() == "1 * (1 - q)");
}
