#include "qsc/upoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsc {

UniPoly UniPoly::monomial(unsigned e, Int coef) {
    if (coef == 0) return {};
    std::vector<Int> c(e + 1, Int(0));
    c[e] = std::move(coef);
    return UniPoly{std::move(c)};
}

UniPoly UniPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& x : c) x = -x;
    return UniPoly{std::move(c)};
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly{std::move(c)};
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly{std::move(c)};
}

std::pair<UniPoly, UniPoly> UniPoly::divrem_monic(const UniPoly& d) const {
    if (!d.is_monic()) throw std::invalid_argument("divisor must be monic");
    std::vector<Int> rem = c_;
    const int dd = d.degree();
    const int qd = degree() - dd;
    if (qd < 0) return {UniPoly{}, *this};
    std::vector<Int> quot(qd + 1, Int(0));
    for (int i = degree(); i >= dd; --i) {
        Int lead = rem[i];
        if (lead == 0) continue;
        quot[i - dd] = lead;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= lead * d.c_[j];
    }
    return {UniPoly{std::move(quot)}, UniPoly{std::move(rem)}};
}

Int UniPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Rat UniPoly::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

const UniPoly& cyclotomic(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic index must be positive");
    static std::map<unsigned, UniPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // q^n - 1 divided by the product of Phi_d over proper divisors d.
    std::vector<Int> qn1(n + 1, Int(0));
    qn1[0] = -1;
    qn1[n] = 1;
    UniPoly num{std::move(qn1)};
    UniPoly den = UniPoly::constant(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto it = cache.find(d);
        if (it == cache.end()) {
            // recurse without double-locking: divisors are computed in
            // ascending order, so fill the cache iteratively
            std::vector<Int> qd1(d + 1, Int(0));
            qd1[0] = -1;
            qd1[d] = 1;
            UniPoly numd{std::move(qd1)};
            UniPoly dend = UniPoly::constant(1);
            for (unsigned e = 1; e < d; ++e)
                if (d % e == 0) dend = dend * cache.at(e);
            auto [qd, rd] = numd.divrem_monic(dend);
            if (!rd.is_zero()) throw std::logic_error("cyclotomic division not exact");
            it = cache.emplace(d, std::move(qd)).first;
        }
        den = den * it->second;
    }
    auto [q, r] = num.divrem_monic(den);
    if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
    return cache.emplace(n, std::move(q)).first->second;
}

UniPoly q_integer(unsigned n) {
    if (n == 0) throw std::domain_error("q-integer index must be positive");
    return UniPoly{std::vector<Int>(n, Int(1))};
}

UniPoly modulus_expand(const ModulusSpec& m) {
    UniPoly p = UniPoly::constant(1);
    for (auto [s, e] : m.factors)
        for (unsigned i = 0; i < e; ++i) p = p * cyclotomic(s);
    return p;
}

std::string ModulusSpec::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [s, e] : factors) {
        if (!first) os << "*";
        first = false;
        os << "Phi_" << s;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::vector<unsigned> proper_cyclotomic_indices(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned s = 2; s <= n; ++s)
        if (n % s == 0) out.push_back(s);
    return out;
}

ModulusSpec modulus_for_theorem(unsigned n, unsigned d, TheoremCase which) {
    if (n == 0 || d == 0 || std::gcd(n, d) != 1)
        throw std::invalid_argument("require gcd(n, d) = 1");
    ModulusSpec m;
    for (unsigned s : proper_cyclotomic_indices(n)) m.factors.emplace_back(s, 1);
    const unsigned strong_residue = which == TheoremCase::Thm1_1 ? d - 1 : 1;
    if (n > 1 && n % d == strong_residue)
        for (auto& [s, e] : m.factors)
            if (s == n) e = 2;
    return m;
}

} // namespace qsc
