#include "qsc/exact.hpp"

#include <doctest.h>

using namespace qsc;

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(91)); // 7 * 13
}

TEST_CASE("integer p-adic valuation") {
    CHECK(padic_valuation(Int(50), 5) == 2);
    CHECK(padic_valuation(Int(-250), 5) == 3);
    CHECK(padic_valuation(Int(7), 5) == 0);
    CHECK_THROWS_AS(padic_valuation(Int(0), 5), std::domain_error);
    CHECK_THROWS_AS(padic_valuation(Int(10), 4), std::domain_error);
}

TEST_CASE("rational p-adic valuation") {
    CHECK(padic_valuation(Rat(50, 3), 5) == 2);
    CHECK(padic_valuation(Rat(1, 125), 5) == -3);
    CHECK(padic_valuation(Rat(3, 7), 5) == 0);
    CHECK_THROWS_AS(padic_valuation(Rat(0), 5), std::domain_error);
}

TEST_CASE("canonical residue of a rational mod p^r") {
    // 3 * 17 = 51 = 2 * 25 + 1
    CHECK(rational_mod_prime_power(Rat(1, 3), 5, 2) == 17);
    CHECK(rational_mod_prime_power(Rat(7), 5, 1) == 2);
    CHECK(rational_mod_prime_power(Rat(-1, 3), 5, 2) == 8);
    CHECK_THROWS_AS(rational_mod_prime_power(Rat(1, 5), 5, 2), std::domain_error);
}

TEST_CASE("residue is consistent with valuation") {
    // x = p-integral implies x = residue (mod p^r) exactly
    for (long num = -6; num <= 6; ++num) {
        for (long den = 1; den <= 6; ++den) {
            if (den % 5 == 0 || num == 0) continue;
            Rat x(num, den);
            x.canonicalize();
            Int res = rational_mod_prime_power(x, 5, 3);
            Rat diff = x - Rat(res);
            if (diff != 0) CHECK(padic_valuation(diff, 5) >= 3);
        }
    }
}

TEST_CASE("rising factorial, exact") {
    CHECK(pochhammer_rational(Rat(1, 2), 3) == Rat(15, 8)); // 1/2 * 3/2 * 5/2
    CHECK(pochhammer_rational(Rat(1, 3), 0) == 1);
    CHECK(pochhammer_rational(Rat(1), 5) == Rat(120));
}

TEST_CASE("rising factorial splits multiplicatively") {
    // (a)_{m+n} = (a)_m (a+m)_n
    for (int num = 1; num <= 4; ++num) {
        Rat a(num, 3);
        a.canonicalize();
        for (unsigned m = 0; m <= 5; ++m) {
            for (unsigned n = 0; n <= 5; ++n) {
                CHECK(pochhammer_rational(a, m + n) ==
                      pochhammer_rational(a, m) * pochhammer_rational(a + Rat(m), n));
            }
        }
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(20) == Int("2432902008176640000"));
}
