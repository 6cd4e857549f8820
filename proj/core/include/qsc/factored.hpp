#pragma once

// Products of q-Pochhammer symbols kept in factored form: a sign, a unit
// monomial, and a multiset of atoms 1 - x^e. Term ratios cancel exactly
// at the atom level, and coprimality against cyclotomic moduli is a
// structural certificate over atoms, never a gcd computation.

#include "qsc/lpoly.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsc {

template <int A>
struct AtomT {
    Expo<A> e{}; // 1 - x^e, canonical: first nonzero exponent in the
                 // (a, b, c, ..., q) order is positive

    friend auto operator<=>(const AtomT&, const AtomT&) = default;
};

/// Structural coprimality of a single atom with Phi_n: Phi_n has degree 0
/// in every parameter and divides 1 - q^delta iff n | delta, so an atom is
/// coprime iff it carries a parameter or its q-exponent is not a multiple
/// of n.
template <int A>
bool atom_coprime_to_cyclotomic(const AtomT<A>& at, unsigned n) {
    for (int i = 1; i < A; ++i)
        if (at.e[i] != 0) return true;
    return at.e[VAR_Q] % static_cast<int32_t>(n) != 0;
}

/// Structural coprimality of an atom with (c - q^E): the atom vanishes
/// under c -> q^E iff c and q are its only variables and the substituted
/// q-exponent is zero.
template <int A>
bool atom_coprime_to_c_minus_q_power(const AtomT<A>& at, long E) {
    for (int i = 1; i < A; ++i)
        if (i != VAR_C && at.e[i] != 0) return true;
    return static_cast<long>(at.e[VAR_C]) * E + at.e[VAR_Q] != 0;
}

template <int A>
class FactoredProductT {
public:
    using Atom = AtomT<A>;
    using Poly = LaurentPolyT<A>;

    FactoredProductT() = default; // the empty product, 1

    static FactoredProductT one() { return {}; }

    int sign() const { return sign_; }
    const Expo<A>& unit() const { return unit_; }
    const std::map<Atom, unsigned>& atoms() const { return atoms_; }
    size_t atom_count() const {
        size_t n = 0;
        for (const auto& [a, m] : atoms_) n += m;
        return n;
    }

    friend bool operator==(const FactoredProductT&, const FactoredProductT&) = default;

    void mul_sign(int s) { sign_ *= s; }
    void mul_monomial(const Expo<A>& e) {
        for (int i = 0; i < A; ++i) unit_[i] += e[i];
    }

    /// Multiply by 1 - x^e, canonicalizing the atom sign convention:
    /// 1 - x^{-1} = -x^{-1} (1 - x), the unit moving into the product.
    void mul_atom(Expo<A> e, unsigned mult = 1) {
        int lead = A; // first nonzero slot in the (params..., q) order
        for (int i = 1; i < A; ++i)
            if (e[i] != 0) {
                lead = i;
                break;
            }
        if (lead == A && e[VAR_Q] != 0) lead = VAR_Q;
        if (lead == A) throw std::invalid_argument("zero atom 1 - 1");
        if (e[lead] < 0) {
            if (mult % 2 == 1) sign_ = -sign_;
            for (int i = 0; i < A; ++i) {
                unit_[i] += e[i] * static_cast<int32_t>(mult);
                e[i] = -e[i];
            }
        }
        atoms_[Atom{e}] += mult;
    }

    FactoredProductT operator*(const FactoredProductT& o) const {
        FactoredProductT p(*this);
        p.sign_ *= o.sign_;
        for (int i = 0; i < A; ++i) p.unit_[i] += o.unit_[i];
        for (const auto& [a, m] : o.atoms_) p.atoms_[a] += m;
        return p;
    }

    /// (x; q^d)_k = prod_{j=0}^{k-1} (1 - x q^{dj}), base x a monomial.
    static FactoredProductT pochhammer(const Expo<A>& base, unsigned step_q, unsigned k) {
        if (step_q == 0) throw std::invalid_argument("pochhammer step must be a positive q-power");
        FactoredProductT p;
        for (unsigned j = 0; j < k; ++j) {
            Expo<A> e = base;
            e[VAR_Q] += static_cast<int32_t>(step_q * j);
            p.mul_atom(e);
        }
        return p;
    }

    /// Exact factorwise quotient; every atom of den must occur in num with
    /// at least the same multiplicity.
    static FactoredProductT divide_exact(const FactoredProductT& num, const FactoredProductT& den) {
        FactoredProductT p(num);
        p.sign_ *= den.sign_;
        for (int i = 0; i < A; ++i) p.unit_[i] -= den.unit_[i];
        for (const auto& [a, m] : den.atoms_) {
            auto it = p.atoms_.find(a);
            if (it == p.atoms_.end() || it->second < m)
                throw std::domain_error("not factorwise divisible");
            it->second -= m;
            if (it->second == 0) p.atoms_.erase(it);
        }
        return p;
    }

    /// Atomwise common part of two products (sign 1, unit 1). Dividing both
    /// out before a cross-multiplication never changes divisibility by a
    /// modulus the common atoms are coprime to.
    static FactoredProductT common_atoms(const FactoredProductT& x, const FactoredProductT& y) {
        FactoredProductT g;
        for (const auto& [a, m] : x.atoms_) {
            auto it = y.atoms_.find(a);
            if (it != y.atoms_.end()) g.atoms_[a] = std::min(m, it->second);
        }
        return g;
    }

    /// Exact expansion to a Laurent polynomial.
    Poly expand() const {
        Poly p = Poly::monomial(unit_, Int(sign_));
        for (const auto& [a, m] : atoms_)
            for (unsigned i = 0; i < m; ++i) p.mul_one_minus(a.e);
        return p;
    }

    /// TRUE iff every atom is structurally coprime to Phi_n. FALSE is a
    /// verdict that the certificate does not apply, not an error.
    bool coprime_to_cyclotomic(unsigned n) const {
        for (const auto& [a, m] : atoms_)
            if (!atom_coprime_to_cyclotomic(a, n)) return false;
        return true;
    }

    /// Exact multiplicity of Phi_n in the expanded product: parameter-bearing
    /// atoms contribute nothing, and a pure-q atom 1 - q^delta contains Phi_n
    /// exactly once when n | delta (since q^delta - 1 is squarefree).
    unsigned cyclotomic_multiplicity(unsigned n) const {
        unsigned v = 0;
        for (const auto& [a, m] : atoms_)
            if (!atom_coprime_to_cyclotomic(a, n)) v += m;
        return v;
    }

    bool coprime_to_c_minus_q_power(long E) const {
        for (const auto& [a, m] : atoms_)
            if (!atom_coprime_to_c_minus_q_power(a, E)) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (sign_ < 0) os << "-";
        os << Poly::monomial(unit_).to_string();
        for (const auto& [a, m] : atoms_) {
            Expo<A> e = a.e;
            os << " * (1 - " << Poly::monomial(e).to_string() << ")";
            if (m > 1) os << "^" << m;
        }
        return os.str();
    }

private:
    int sign_ = 1;
    Expo<A> unit_{};
    std::map<Atom, unsigned> atoms_;
};

using FactoredProduct = FactoredProductT<4>;

/// p * expand(f), computed factor-by-factor (each atom is a binomial, so
/// every step is a shift-and-merge on the current polynomial).
template <int A>
LaurentPolyT<A> multiplied(const FactoredProductT<A>& f, LaurentPolyT<A> p) {
    if (f.sign() < 0) p = -p;
    p.mul_monomial(f.unit());
    for (const auto& [a, m] : f.atoms())
        for (unsigned i = 0; i < m; ++i) p.mul_one_minus(a.e);
    return p;
}

} // namespace qsc
