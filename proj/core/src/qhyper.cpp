#include "qsc/qhyper.hpp"

#include <numeric>
#include <stdexcept>

namespace qsc {

std::string family_name(Family f) {
    switch (f) {
        case Family::Thm1_1: return "thm1.1";
        case Family::Thm1_2: return "thm1.2";
        case Family::Eq1_5: return "eq1.5";
        case Family::Lemma2_2: return "lemma2.2";
        case Family::Thm2_3: return "thm2.3";
        case Family::Proof2_6Lhs: return "proof2.6-lhs";
        case Family::Proof2_6Rhs: return "proof2.6-rhs";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Thm1_1, Family::Thm1_2, Family::Eq1_5, Family::Lemma2_2,
                     Family::Thm2_3, Family::Proof2_6Lhs, Family::Proof2_6Rhs})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

unsigned lemma_truncation(unsigned n, unsigned d, int r) {
    if (n == 0 || std::gcd(n, d) != 1)
        throw std::invalid_argument("lemma_truncation requires gcd(n, d) = 1");
    long target = ((-r) % static_cast<long>(n) + n) % n;
    for (unsigned m = 0; m < n; ++m)
        if (static_cast<long>(d) * m % n == target) return m;
    throw std::logic_error("unreachable: gcd(n, d) = 1 guarantees a solution");
}

SumSpec make_spec(Family f, unsigned n, unsigned d, int r, std::optional<unsigned> M) {
    if (n == 0 || d == 0) throw std::invalid_argument("n and d must be positive");
    SumSpec s;
    s.family = f;
    s.n = n;
    s.d = d;
    s.r = r;
    auto require = [](bool cond, const char* msg) {
        if (!cond) throw std::invalid_argument(msg);
    };
    switch (f) {
        case Family::Thm1_1:
        case Family::Eq1_5:
            require(d >= 3, "d >= 3 required");
            require(std::gcd(n, d) == 1, "gcd(n, d) = 1 required");
            s.r = 1;
            s.c_mode = CMode::One;
            s.b_symbolic = f == Family::Thm1_1;
            s.M = n - 1;
            break;
        case Family::Thm1_2:
            require(d >= 3, "d >= 3 required");
            require(n > 1, "n > 1 required");
            require(std::gcd(n, d) == 1, "gcd(n, d) = 1 required");
            s.r = -1;
            s.c_mode = CMode::One;
            s.M = n - 1;
            break;
        case Family::Lemma2_2:
            require(std::gcd(n, d) == 1, "gcd(n, d) = 1 required");
            s.c_mode = CMode::Symbolic;
            s.M = M.value_or(n - 1);
            require(s.M <= n - 1, "M <= n-1 required");
            break;
        case Family::Thm2_3: {
            require(d >= 3, "d >= 3 required");
            require(n > 1, "n > 1 required");
            require(r == 1 || r == -1, "r = +-1 required");
            require(std::gcd(n, d) == 1, "gcd(n, d) = 1 required");
            long res = ((-r) % static_cast<long>(d) + d) % d;
            require(n % d == static_cast<unsigned>(res), "n = -r (mod d) required");
            s.c_mode = CMode::One;
            long num = static_cast<long>(d) * n - n - r;
            if (M) {
                s.M = *M;
            } else {
                require(num % d == 0, "(dn-n-r)/d not integral");
                s.M = static_cast<unsigned>(num / d);
            }
            require(s.M <= n - 1, "M <= n-1 required");
            break;
        }
        case Family::Proof2_6Lhs:
        case Family::Proof2_6Rhs: {
            require(n > 1, "n > 1 required");
            require(r == 1 || r == -1, "r = +-1 required");
            require(std::gcd(n, d) == 1, "gcd(n, d) = 1 required");
            long res = ((-r) % static_cast<long>(d) + d) % d;
            require(n % d == static_cast<unsigned>(res), "n = -r (mod d) required");
            s.c_mode = CMode::Symbolic;
            s.c_pow = static_cast<long>(d) * n - n;
            s.M = M.value_or(n - 1);
            require(s.M <= n - 1, "M <= n-1 required");
            break;
        }
    }
    if (M && f != Family::Lemma2_2 && f != Family::Thm2_3 && f != Family::Proof2_6Lhs &&
        f != Family::Proof2_6Rhs && *M != s.M)
        throw std::invalid_argument("family has a fixed truncation");
    return s;
}

namespace {

Expo<4> mono(int32_t q, int32_t a = 0, int32_t b = 0, int32_t c = 0) {
    Expo<4> e{};
    e[VAR_Q] = q;
    e[VAR_A] = a;
    e[VAR_B] = b;
    e[VAR_C] = c;
    return e;
}

// apply the spec's b/c specializations to a base monomial
Expo<4> specialize(Expo<4> e, const SumSpec& s) {
    if (!s.b_symbolic) e[VAR_B] = 0;
    switch (s.c_mode) {
        case CMode::Symbolic: break;
        case CMode::One: e[VAR_C] = 0; break;
        case CMode::PowQ:
            e[VAR_Q] += static_cast<int32_t>(e[VAR_C] * s.c_pow);
            e[VAR_C] = 0;
            break;
    }
    return e;
}

} // namespace

TermRatio term(const SumSpec& spec, unsigned k) {
    if (k > spec.M) throw std::out_of_range("term index exceeds truncation");
    const int32_t d = static_cast<int32_t>(spec.d);
    const int32_t r = static_cast<int32_t>(spec.r);
    TermRatio t;

    if (spec.family == Family::Proof2_6Rhs) {
        // summand of the 4phi3-style side:
        //   (q^{d-r}, bq^r, q^r/b, q^r/c; q^d)_k q^{dk}
        //   / (q^d/a, aq^d, q^{2r}/c, q^d; q^d)_k
        t.bracket = LaurentPoly::constant(1);
        const Expo<4> num_bases[] = {mono(d - r), mono(r, 0, 1), mono(r, 0, -1),
                                     mono(r, 0, 0, -1)};
        const Expo<4> den_bases[] = {mono(d, -1), mono(d, 1), mono(2 * r, 0, 0, -1),
                                     mono(d)};
        for (const auto& b : num_bases)
            t.num = t.num * FactoredProduct::pochhammer(specialize(b, spec), spec.d, k);
        for (const auto& b : den_bases)
            t.den = t.den * FactoredProduct::pochhammer(specialize(b, spec), spec.d, k);
        t.mono = mono(static_cast<int32_t>(d * k));
        return t;
    }

    // generic summand:
    //   [2dk+r] (aq^r, q^r/a, bq^r, q^r/b, q^r/c, q^r; q^d)_k
    //   / (aq^d, q^d/a, bq^d, q^d/b, cq^d, q^d; q^d)_k * (c q^{2d-3r})^k
    t.bracket = bracket_laurent(2L * spec.d * k + spec.r);
    const Expo<4> num_bases[] = {mono(r, 1),         mono(r, -1), mono(r, 0, 1),
                                 mono(r, 0, -1),     mono(r, 0, 0, -1), mono(r)};
    const Expo<4> den_bases[] = {mono(d, 1),         mono(d, -1), mono(d, 0, 1),
                                 mono(d, 0, -1),     mono(d, 0, 0, 1),  mono(d)};
    for (const auto& b : num_bases)
        t.num = t.num * FactoredProduct::pochhammer(specialize(b, spec), spec.d, k);
    for (const auto& b : den_bases)
        t.den = t.den * FactoredProduct::pochhammer(specialize(b, spec), spec.d, k);
    Expo<4> step = specialize(mono(2 * d - 3 * r + spec.mono_bump, 0, 0, 1), spec);
    for (int i = 0; i < 4; ++i) t.mono[i] = step[i] * static_cast<int32_t>(k);
    return t;
}

Assembled assemble(const SumSpec& spec) {
    Assembled out;
    out.terms_built = spec.M + 1;

    FactoredProduct D = term(spec, spec.M).den;
    LaurentPoly N;
    for (unsigned k = 0; k <= spec.M; ++k) {
        TermRatio t = term(spec, k);
        FactoredProduct scaled = t.num * FactoredProduct::divide_exact(D, t.den);
        LaurentPoly e = scaled.expand();
        e = e * t.bracket;
        e.mul_monomial(t.mono);
        N.add_scaled(e, Int(1));
    }

    if (spec.family == Family::Proof2_6Rhs) {
        // prefactor [dn-n] (q^r, q^{d-r}; q^d)_P / (q^d/b, bq^d; q^d)_P,
        // P = (dn-n-r)/d
        const long dnn = static_cast<long>(spec.d) * spec.n - spec.n;
        const long pnum = dnn - spec.r;
        if (pnum % spec.d != 0) throw std::invalid_argument("(dn-n-r)/d not integral");
        const unsigned P = static_cast<unsigned>(pnum / spec.d);
        FactoredProduct pre_num =
            FactoredProduct::pochhammer(mono(spec.r), spec.d, P) *
            FactoredProduct::pochhammer(mono(static_cast<int32_t>(spec.d) - spec.r), spec.d, P);
        FactoredProduct pre_den =
            FactoredProduct::pochhammer(mono(static_cast<int32_t>(spec.d), 0, -1), spec.d, P) *
            FactoredProduct::pochhammer(mono(static_cast<int32_t>(spec.d), 0, 1), spec.d, P);
        N = N * bracket_laurent(dnn);
        LaurentPoly pre = pre_num.expand();
        N = N * pre;
        D = D * pre_den;
    }

    auto [cleared, shift] = clear_q_units(std::move(N));
    out.num = std::move(cleared);
    out.q_shift = shift;
    out.den = std::move(D);
    out.max_q_degree = out.num.is_zero() ? 0 : out.num.max_exp(VAR_Q);
    return out;
}

std::pair<Assembled, Assembled>
proof_identity_2_6(unsigned n, unsigned d, int r, unsigned M, bool symbolic_c) {
    SumSpec lhs = make_spec(Family::Proof2_6Lhs, n, d, r, M);
    SumSpec rhs = make_spec(Family::Proof2_6Rhs, n, d, r, M);
    if (!symbolic_c) {
        lhs.c_mode = CMode::PowQ;
        rhs.c_mode = CMode::PowQ;
    }
    return {assemble(lhs), assemble(rhs)};
}

std::optional<unsigned> min_vanishing_index(long x, unsigned d, unsigned n) {
    if (d == 0 || n < 2) throw std::invalid_argument("require d >= 1, n >= 2");
    for (unsigned j = 0; j < n; ++j) {
        long v = x + static_cast<long>(d) * j;
        if ((v % static_cast<long>(n) + n) % n == 0) return j + 1;
    }
    return std::nullopt;
}

} // namespace qsc
