#pragma once

// Sparse multivariate Laurent polynomials over arbitrary-precision
// integers. The arity is a template parameter: the main engine works in
// the fixed ring Z[q^+-, a^+-, b^+-, c^+-] (arity 4, slot order
// q > a > b > c), the Watson transformation check in a six-variable
// extension (q plus five transformation parameters).

#include "qsc/exact.hpp"
#include "qsc/upoly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsc {

template <int A>
using Expo = std::array<int32_t, A>;

template <int A>
constexpr Expo<A> zero_expo() {
    return Expo<A>{};
}

inline constexpr int VAR_Q = 0;
inline constexpr int VAR_A = 1;
inline constexpr int VAR_B = 2;
inline constexpr int VAR_C = 3;

template <int A>
const std::array<std::string, A>& var_names() {
    static const std::array<std::string, A> names = [] {
        static const char* base[] = {"q", "a", "b", "c", "d", "e", "f", "g"};
        std::array<std::string, A> n;
        for (int i = 0; i < A; ++i) n[i] = base[i];
        return n;
    }();
    return names;
}

template <int A>
class LaurentPolyT {
public:
    using Mono = Expo<A>;
    using Term = std::pair<Mono, Int>;

    LaurentPolyT() = default;

    static LaurentPolyT constant(Int v) {
        LaurentPolyT p;
        if (v != 0) p.terms_.emplace_back(zero_expo<A>(), std::move(v));
        return p;
    }
    static LaurentPolyT monomial(const Mono& e, Int coef = 1) {
        LaurentPolyT p;
        if (coef != 0) p.terms_.emplace_back(e, std::move(coef));
        return p;
    }
    static LaurentPolyT variable(int var, int32_t e = 1) {
        Mono m{};
        m[var] = e;
        return monomial(m);
    }
    static LaurentPolyT from_terms(std::vector<Term> terms) {
        LaurentPolyT p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// True iff the polynomial is a single term with coefficient +-1.
    bool is_unit_monomial() const {
        return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
    }

    friend bool operator==(const LaurentPolyT&, const LaurentPolyT&) = default;

    LaurentPolyT operator-() const {
        LaurentPolyT p(*this);
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    LaurentPolyT operator+(const LaurentPolyT& o) const {
        LaurentPolyT p(*this);
        p.add_scaled(o, Int(1));
        return p;
    }
    LaurentPolyT operator-(const LaurentPolyT& o) const {
        LaurentPolyT p(*this);
        p.add_scaled(o, Int(-1));
        return p;
    }

    /// *this += s * o, by sorted merge.
    void add_scaled(const LaurentPolyT& o, const Int& s) {
        if (s == 0 || o.is_zero()) return;
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        while (it != terms_.end() && jt != o.terms_.end()) {
            if (it->first < jt->first) {
                out.push_back(std::move(*it++));
            } else if (jt->first < it->first) {
                out.emplace_back(jt->first, s * jt->second);
                ++jt;
            } else {
                Int c = it->second + s * jt->second;
                if (c != 0) out.emplace_back(it->first, std::move(c));
                ++it;
                ++jt;
            }
        }
        for (; it != terms_.end(); ++it) out.push_back(std::move(*it));
        for (; jt != o.terms_.end(); ++jt) out.emplace_back(jt->first, s * jt->second);
        terms_ = std::move(out);
    }

    /// Multiply in place by coef * x^e (order is preserved by a uniform shift).
    void mul_monomial(const Mono& e, const Int& coef = 1) {
        if (coef == 0) {
            terms_.clear();
            return;
        }
        for (auto& [m, c] : terms_) {
            for (int i = 0; i < A; ++i) m[i] += e[i];
            if (coef != 1) c *= coef;
        }
    }

    /// Multiply in place by (1 - x^e): p - x^e * p.
    void mul_one_minus(const Mono& e) {
        LaurentPolyT shifted(*this);
        shifted.mul_monomial(e);
        add_scaled(shifted, Int(-1));
    }

    LaurentPolyT operator*(const LaurentPolyT& o) const {
        if (is_zero() || o.is_zero()) return {};
        const LaurentPolyT& small = terms_.size() <= o.terms_.size() ? *this : o;
        const LaurentPolyT& big = terms_.size() <= o.terms_.size() ? o : *this;
        LaurentPolyT acc;
        for (const auto& [e, c] : small.terms_) {
            LaurentPolyT shifted(big);
            shifted.mul_monomial(e, c);
            acc.add_scaled(shifted, Int(1));
        }
        return acc;
    }

    LaurentPolyT pow(unsigned k) const {
        LaurentPolyT acc = constant(1);
        LaurentPolyT base(*this);
        while (k > 0) {
            if (k & 1u) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }

    int32_t min_exp(int var) const {
        if (is_zero()) return 0;
        int32_t m = terms_[0].first[var];
        for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
        return m;
    }
    int32_t max_exp(int var) const {
        if (is_zero()) return 0;
        int32_t m = terms_[0].first[var];
        for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
        return m;
    }

    /// Remove the unit factor var^m (m = min exponent of var); returns m.
    /// Multiplying by a unit never changes divisibility in the Laurent ring.
    int32_t clear_units(int var) {
        if (is_zero()) return 0;
        int32_t m = min_exp(var);
        if (m != 0) {
            for (auto& [e, c] : terms_) e[var] -= m;
            if (var == 0) {
                // q is the most significant slot: a uniform shift keeps order
            } else {
                std::sort(terms_.begin(), terms_.end(),
                          [](const Term& x, const Term& y) { return x.first < y.first; });
            }
        }
        return m;
    }

    /// Exact substitution of one variable by a polynomial value. If the
    /// variable occurs with negative exponents, value must be an
    /// invertible monomial (single term, coefficient +-1).
    LaurentPolyT substitute(int var, const LaurentPolyT& value) const {
        bool has_negative = false;
        for (const auto& [e, c] : terms_)
            if (e[var] < 0) has_negative = true;
        if (has_negative && !value.is_unit_monomial())
            throw std::domain_error("substitute: negative exponent requires an invertible monomial value");

        std::map<int32_t, LaurentPolyT> powers;
        auto power_of = [&](int32_t k) -> const LaurentPolyT& {
            auto it = powers.find(k);
            if (it != powers.end()) return it->second;
            LaurentPolyT v;
            if (k >= 0) {
                v = value.pow(static_cast<unsigned>(k));
            } else {
                Mono inv = value.terms_[0].first;
                for (int i = 0; i < A; ++i) inv[i] = -inv[i];
                LaurentPolyT vinv = monomial(inv, value.terms_[0].second); // coef is +-1, self-inverse
                v = vinv.pow(static_cast<unsigned>(-k));
            }
            return powers.emplace(k, std::move(v)).first->second;
        };

        LaurentPolyT out;
        for (const auto& [e, c] : terms_) {
            Mono rest = e;
            int32_t k = rest[var];
            rest[var] = 0;
            LaurentPolyT piece = power_of(k);
            piece.mul_monomial(rest, c);
            out.add_scaled(piece, Int(1));
        }
        return out;
    }

    Rat evaluate(const std::array<Rat, A>& point) const {
        Rat acc = 0;
        for (const auto& [e, c] : terms_) {
            Rat t(c);
            for (int i = 0; i < A; ++i) {
                if (e[i] == 0) continue;
                if (point[i] == 0) throw std::domain_error("evaluate: zero base with nonzero exponent");
                Rat b = point[i];
                int32_t k = e[i];
                if (k < 0) {
                    b = 1 / b;
                    k = -k;
                }
                for (int32_t j = 0; j < k; ++j) t *= b;
            }
            acc += t;
        }
        return acc;
    }

    /// Canonical human-readable form: terms sorted descending in the
    /// q > a > b > c order, explicit exponents.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool any_var = false;
            for (int i = 0; i < A; ++i) any_var = any_var || e[i] != 0;
            if (mag != 1 || !any_var) os << mag.get_str();
            bool need_star = mag != 1;
            for (int i = 0; i < A; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                os << var_names<A>()[i];
                if (e[i] != 1) os << "^" << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
                if (out.back().second == 0) out.pop_back();
            } else if (t.second != 0) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    std::vector<Term> terms_; // sorted ascending by exponent tuple, no zeros
};

using LaurentPoly = LaurentPolyT<4>;   // (q, a, b, c)
using WatsonPoly = LaurentPolyT<6>;    // (q, a, b, c, d, e) of Watson's 8phi7

/// [x] = (1 - q^x)/(1 - q) as a Laurent polynomial, any integer x.
template <int A = 4>
LaurentPolyT<A> bracket_laurent(long x) {
    std::vector<typename LaurentPolyT<A>::Term> terms;
    if (x > 0) {
        for (long i = 0; i < x; ++i) {
            Expo<A> e{};
            e[VAR_Q] = static_cast<int32_t>(i);
            terms.emplace_back(e, Int(1));
        }
    } else if (x < 0) {
        for (long i = x; i <= -1; ++i) {
            Expo<A> e{};
            e[VAR_Q] = static_cast<int32_t>(i);
            terms.emplace_back(e, Int(-1));
        }
    }
    return LaurentPolyT<A>::from_terms(std::move(terms));
}

/// q^{-m} * p with m the minimal q-exponent, plus the shift m. Legitimate
/// before any divisibility test against a cyclotomic modulus: q is a unit
/// in the Laurent ring and Phi_n(0) = +-1.
template <int A>
std::pair<LaurentPolyT<A>, int32_t> clear_q_units(LaurentPolyT<A> p) {
    int32_t m = p.clear_units(VAR_Q);
    return {std::move(p), m};
}

/// Division of p (no negative q-exponents) by a monic univariate modulus,
/// treating p as univariate in q with Laurent coefficients in the other
/// variables. Exactness follows from monicity.
template <int A>
std::pair<LaurentPolyT<A>, LaurentPolyT<A>>
divrem_by_unipoly_in_q(const LaurentPolyT<A>& p, const UniPoly& m) {
    if (!m.is_monic()) throw std::invalid_argument("modulus must be monic in q");
    if (p.is_zero()) return {{}, {}};
    if (p.min_exp(VAR_Q) < 0)
        throw std::invalid_argument("dividend has negative q-exponents; clear q-units first");

    const int dm = m.degree();
    const int32_t dp = p.max_exp(VAR_Q);

    // slice into q-degree coefficients (terms are sorted with q most
    // significant, so each slice is already in canonical order)
    std::vector<LaurentPolyT<A>> coeffs(dp + 1);
    {
        std::vector<std::vector<typename LaurentPolyT<A>::Term>> buckets(dp + 1);
        for (const auto& [e, c] : p.terms()) {
            Expo<A> rest = e;
            rest[VAR_Q] = 0;
            buckets[e[VAR_Q]].emplace_back(rest, c);
        }
        for (int i = 0; i <= dp; ++i)
            coeffs[i] = LaurentPolyT<A>::from_terms(std::move(buckets[i]));
    }

    std::vector<LaurentPolyT<A>> quot(dp >= dm ? dp - dm + 1 : 0);
    for (int i = dp; i >= dm; --i) {
        if (coeffs[i].is_zero()) continue;
        LaurentPolyT<A> lead = std::move(coeffs[i]);
        coeffs[i] = {};
        for (int j = 0; j < dm; ++j) {
            const Int& mj = m.coeff(j);
            if (mj != 0) coeffs[i - dm + j].add_scaled(lead, -mj);
        }
        quot[i - dm] = std::move(lead);
    }

    // slices are disjoint in q and ascending, so concatenation is sorted
    auto reassemble = [](std::vector<LaurentPolyT<A>>& parts) {
        std::vector<typename LaurentPolyT<A>::Term> all;
        for (size_t i = 0; i < parts.size(); ++i) {
            for (const auto& [e, c] : parts[i].terms()) {
                Expo<A> shifted = e;
                shifted[VAR_Q] = static_cast<int32_t>(i);
                all.emplace_back(shifted, c);
            }
        }
        return LaurentPolyT<A>::from_terms(std::move(all));
    };
    coeffs.resize(std::min<size_t>(coeffs.size(), dm));
    return {reassemble(quot), reassemble(coeffs)};
}

} // namespace qsc
