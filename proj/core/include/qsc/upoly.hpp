#pragma once

// Dense univariate polynomials over arbitrary-precision integers in q.
// Home of the cyclotomic polynomials and q-integers that serve as the
// moduli of every congruence check.

#include "qsc/exact.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qsc {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Int v) {
        if (v == 0) return UniPoly{};
        return UniPoly{{std::move(v)}};
    }
    /// q^e
    static UniPoly monomial(unsigned e, Int coef = 1);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(unsigned i) const {
        static const Int zero = 0;
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;

    /// Long division by a monic divisor: *this = d*quot + rem, deg rem < deg d.
    std::pair<UniPoly, UniPoly> divrem_monic(const UniPoly& d) const;

    /// Content = gcd of coefficients (0 for the zero polynomial).
    Int content() const;

    Rat evaluate(const Rat& x) const;

    std::string to_string(const std::string& var = "q") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_; // c_[i] is the coefficient of q^i
};

/// Phi_n(q) by dividing q^n - 1 by all lower cyclotomic divisors.
/// Memoized; safe for concurrent use.
const UniPoly& cyclotomic(unsigned n);

/// [n] = 1 + q + ... + q^{n-1}.
UniPoly q_integer(unsigned n);

/// A modulus held as a cyclotomic factorization: prod Phi_s(q)^{e_s}.
struct ModulusSpec {
    // (s, e_s) pairs, s distinct, e_s >= 1, sorted by s.
    std::vector<std::pair<unsigned, unsigned>> factors;

    bool empty() const { return factors.empty(); }
    std::string to_string() const;
};

UniPoly modulus_expand(const ModulusSpec& m);

enum class TheoremCase { Thm1_1, Thm1_2 };

/// Modulus of Theorem 1.1 / 1.2 for given (n, d): [n] as {Phi_s : s|n, s>1},
/// strengthened to [n]*Phi_n when the strong-case residue condition holds
/// (n = -1 mod d for Thm 1.1, n = +1 mod d for Thm 1.2).
ModulusSpec modulus_for_theorem(unsigned n, unsigned d, TheoremCase which);

/// Divisors of n greater than 1, ascending.
std::vector<unsigned> proper_cyclotomic_indices(unsigned n);

} // namespace qsc
