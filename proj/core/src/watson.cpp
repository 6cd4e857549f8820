#include "qsc/watson.hpp"

#include "qsc/exact.hpp"
#include "qsc/factored.hpp"
#include "qsc/lpoly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qsc {

namespace {

// slots of the six-variable ring: q, and Watson's a, b, c, d, e (f = q^{-N})
constexpr int WQ = 0, WA = 1, WB = 2, WC = 3, WD = 4, WE = 5;

using WProd = FactoredProductT<6>;

Expo<6> wmono(int32_t q, int32_t a = 0, int32_t b = 0, int32_t c = 0, int32_t d = 0,
              int32_t e = 0) {
    return Expo<6>{q, a, b, c, d, e};
}

// (x; q)_k with unit q-step
WProd wpoch(const Expo<6>& base, unsigned k) { return WProd::pochhammer(base, 1, k); }

struct Side {
    WatsonPoly num;
    WProd den;
};

// LHS: sum over k of the very-well-poised 8phi7 summand with f = q^{-N};
// the paired sqrt(a) parameters collapse to (1 - a q^{2k})/(1 - a).
Side watson_lhs(unsigned N) {
    const int32_t iN = static_cast<int32_t>(N);
    const Expo<6> num_bases[] = {wmono(0, 1), wmono(0, 0, 1), wmono(0, 0, 0, 1),
                                 wmono(0, 0, 0, 0, 1), wmono(0, 0, 0, 0, 0, 1),
                                 wmono(-iN)};
    const Expo<6> den_bases[] = {wmono(1),
                                 wmono(1, 1, -1),
                                 wmono(1, 1, 0, -1),
                                 wmono(1, 1, 0, 0, -1),
                                 wmono(1, 1, 0, 0, 0, -1),
                                 wmono(iN + 1, 1)};
    const Expo<6> z = wmono(iN + 2, 2, -1, -1, -1, -1); // a^2 q^{N+2}/(bcde)

    auto den_at = [&](unsigned k) {
        WProd p;
        for (const auto& b : den_bases) p = p * wpoch(b, k);
        return p;
    };
    WProd den_top = den_at(N);

    WatsonPoly num;
    for (unsigned k = 0; k <= N; ++k) {
        WProd t;
        for (const auto& b : num_bases) t = t * wpoch(b, k);
        t = t * WProd::divide_exact(den_top, den_at(k));
        Expo<6> vwp = wmono(2 * static_cast<int32_t>(k), 1); // a q^{2k}
        t.mul_atom(vwp);
        WatsonPoly e = t.expand();
        Expo<6> zk{};
        for (int i = 0; i < 6; ++i) zk[i] = z[i] * static_cast<int32_t>(k);
        e.mul_monomial(zk);
        num.add_scaled(e, Int(1));
    }
    Side s;
    s.num = std::move(num);
    s.den = std::move(den_top);
    s.den.mul_atom(wmono(0, 1)); // the shared (1 - a) of the well-poised factor
    return s;
}

// RHS: finite prefactor times the terminating 4phi3.
Side watson_rhs(unsigned N, bool drop_prefactor) {
    const int32_t iN = static_cast<int32_t>(N);
    const Expo<6> num_bases[] = {wmono(1, 1, -1, -1), // aq/bc
                                 wmono(0, 0, 0, 0, 1), wmono(0, 0, 0, 0, 0, 1),
                                 wmono(-iN)};
    const Expo<6> den_bases[] = {wmono(1), wmono(1, 1, -1), wmono(1, 1, 0, -1),
                                 wmono(-iN, -1, 0, 0, 1, 1)}; // def/a = de q^{-N}/a

    auto den_at = [&](unsigned k) {
        WProd p;
        for (const auto& b : den_bases) p = p * wpoch(b, k);
        return p;
    };
    WProd den_top = den_at(N);

    WatsonPoly num;
    for (unsigned k = 0; k <= N; ++k) {
        WProd t;
        for (const auto& b : num_bases) t = t * wpoch(b, k);
        t = t * WProd::divide_exact(den_top, den_at(k));
        WatsonPoly e = t.expand();
        e.mul_monomial(wmono(static_cast<int32_t>(k))); // q^k
        num.add_scaled(e, Int(1));
    }

    Side s;
    s.num = std::move(num);
    s.den = std::move(den_top);
    if (!drop_prefactor) {
        WProd pre_num = wpoch(wmono(1, 1), N) *              // (aq;q)_N
                        wpoch(wmono(1, 1, 0, 0, -1, -1), N); // (aq/de;q)_N
        WProd pre_den = wpoch(wmono(1, 1, 0, 0, -1), N) *    // (aq/d;q)_N
                        wpoch(wmono(1, 1, 0, 0, 0, -1), N);  // (aq/e;q)_N
        s.num = multiplied(pre_num, std::move(s.num));
        s.den = s.den * pre_den;
    }
    return s;
}

// ---- exact-rational specialization path (q symbolic) ------------------

// Laurent polynomial in q with rational coefficients
using QPoly = std::map<int32_t, Rat>;

void qp_add_scaled(QPoly& p, const QPoly& o, const Rat& s) {
    for (const auto& [e, c] : o) {
        Rat& slot = p[e];
        slot += s * c;
        if (slot == 0) p.erase(e);
    }
}

// p *= (1 - coef q^exp)
void qp_mul_factor(QPoly& p, const Rat& coef, int32_t exp) {
    QPoly shifted;
    for (const auto& [e, c] : p) shifted[e + exp] = c;
    qp_add_scaled(p, shifted, -coef);
}

void qp_mul_monomial(QPoly& p, const Rat& coef, int32_t exp) {
    QPoly out;
    for (const auto& [e, c] : p) out[e + exp] = c * coef;
    p = std::move(out);
}

QPoly qp_mul(const QPoly& x, const QPoly& y) {
    QPoly out;
    for (const auto& [e1, c1] : x)
        for (const auto& [e2, c2] : y) {
            Rat& slot = out[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) out.erase(e1 + e2);
        }
    return out;
}

struct Factor {
    Rat coef;
    int32_t exp; // the factor 1 - coef * q^exp
    bool is_zero_poly() const { return exp == 0 && coef == 1; }
};

struct SingularDraw : std::runtime_error {
    SingularDraw() : std::runtime_error("singular specialization, resample") {}
};

// (base_coef q^{base_exp}; q)_k as a factor list; throws on a zero factor
std::vector<Factor> rpoch(const Rat& base_coef, int32_t base_exp, unsigned k) {
    std::vector<Factor> fs;
    for (unsigned j = 0; j < k; ++j)
        fs.push_back({base_coef, base_exp + static_cast<int32_t>(j)});
    return fs;
}

QPoly qp_expand(const std::vector<Factor>& fs) {
    QPoly p{{0, Rat(1)}};
    for (const auto& f : fs) qp_mul_factor(p, f.coef, f.exp);
    return p;
}

void require_nonsingular(const std::vector<Factor>& den) {
    for (const auto& f : den)
        if (f.is_zero_poly()) throw SingularDraw{};
}

struct RSide {
    QPoly num;
    std::vector<Factor> den;
};

RSide watson_lhs_rational(unsigned N, const Rat& a, const Rat& b, const Rat& c,
                          const Rat& d, const Rat& e) {
    const int32_t iN = static_cast<int32_t>(N);
    struct Base {
        Rat coef;
        int32_t exp;
    };
    const Base nb[] = {{a, 0}, {b, 0}, {c, 0}, {d, 0}, {e, 0}, {Rat(1), -iN}};
    const Base db[] = {{Rat(1), 1}, {a / b, 1}, {a / c, 1}, {a / d, 1}, {a / e, 1}, {a, iN + 1}};
    const Rat zc = a * a / (b * c * d * e);
    const int32_t ze = iN + 2;

    auto den_at = [&](unsigned k) {
        std::vector<Factor> fs;
        for (const auto& x : db) {
            auto part = rpoch(x.coef, x.exp, k);
            fs.insert(fs.end(), part.begin(), part.end());
        }
        return fs;
    };
    std::vector<Factor> den_top = den_at(N);
    den_top.push_back({a, 0}); // (1 - a)
    require_nonsingular(den_top);

    QPoly num;
    for (unsigned k = 0; k <= N; ++k) {
        std::vector<Factor> fs;
        for (const auto& x : nb) {
            auto part = rpoch(x.coef, x.exp, k);
            fs.insert(fs.end(), part.begin(), part.end());
        }
        // complement den_top / den_k: per-Pochhammer suffix factors
        for (const auto& x : db) {
            for (unsigned j = k; j < N; ++j)
                fs.push_back({x.coef, x.exp + static_cast<int32_t>(j)});
        }
        fs.push_back({a, 2 * static_cast<int32_t>(k)}); // 1 - a q^{2k}
        QPoly t = qp_expand(fs);
        Rat zk = 1;
        for (unsigned j = 0; j < k; ++j) zk *= zc;
        qp_mul_monomial(t, zk, ze * static_cast<int32_t>(k));
        qp_add_scaled(num, t, Rat(1));
    }
    return {std::move(num), std::move(den_top)};
}

RSide watson_rhs_rational(unsigned N, const Rat& a, const Rat& b, const Rat& c,
                          const Rat& d, const Rat& e, bool drop_prefactor) {
    const int32_t iN = static_cast<int32_t>(N);
    struct Base {
        Rat coef;
        int32_t exp;
    };
    const Base nb[] = {{a / (b * c), 1}, {d, 0}, {e, 0}, {Rat(1), -iN}};
    const Base db[] = {{Rat(1), 1}, {a / b, 1}, {a / c, 1}, {d * e / a, -iN}};

    auto den_at = [&](unsigned k) {
        std::vector<Factor> fs;
        for (const auto& x : db) {
            auto part = rpoch(x.coef, x.exp, k);
            fs.insert(fs.end(), part.begin(), part.end());
        }
        return fs;
    };
    std::vector<Factor> den_top = den_at(N);

    QPoly num;
    for (unsigned k = 0; k <= N; ++k) {
        std::vector<Factor> fs;
        for (const auto& x : nb) {
            auto part = rpoch(x.coef, x.exp, k);
            fs.insert(fs.end(), part.begin(), part.end());
        }
        for (const auto& x : db)
            for (unsigned j = k; j < N; ++j)
                fs.push_back({x.coef, x.exp + static_cast<int32_t>(j)});
        QPoly t = qp_expand(fs);
        qp_mul_monomial(t, Rat(1), static_cast<int32_t>(k)); // q^k
        qp_add_scaled(num, t, Rat(1));
    }

    if (!drop_prefactor) {
        std::vector<Factor> pre_num;
        auto append = [](std::vector<Factor>& dst, std::vector<Factor> src) {
            dst.insert(dst.end(), src.begin(), src.end());
        };
        append(pre_num, rpoch(a, 1, N));           // (aq;q)_N
        append(pre_num, rpoch(a / (d * e), 1, N)); // (aq/de;q)_N
        num = qp_mul(num, qp_expand(pre_num));
        append(den_top, rpoch(a / d, 1, N)); // (aq/d;q)_N
        append(den_top, rpoch(a / e, 1, N)); // (aq/e;q)_N
    }
    require_nonsingular(den_top);
    return {std::move(num), std::move(den_top)};
}

} // namespace

bool watson_check_symbolic(unsigned N, const WatsonOptions& opts) {
    Side lhs = watson_lhs(N);
    Side rhs = watson_rhs(N, opts.drop_prefactor);
    WatsonPoly cross_l = multiplied(rhs.den, lhs.num);
    WatsonPoly cross_r = multiplied(lhs.den, rhs.num);
    return cross_l == cross_r;
}

WatsonRandomReport watson_check_random(unsigned N, unsigned trials, uint64_t seed,
                                       const WatsonOptions& opts) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numd(1, 12), dend(1, 12);
    auto draw = [&]() -> Rat {
        Rat x(numd(rng), dend(rng));
        x.canonicalize();
        Rat y(numd(rng), 13);
        y.canonicalize();
        return x + y;
    };

    WatsonRandomReport rep;
    const unsigned budget = 100 * std::max(trials, 1u);
    unsigned attempts = 0;
    while (rep.trials_run < trials) {
        if (++attempts > budget)
            throw std::runtime_error("watson: resample budget exhausted");
        Rat a = draw(), b = draw(), c = draw(), d = draw(), e = draw();
        try {
            RSide lhs = watson_lhs_rational(N, a, b, c, d, e);
            RSide rhs = watson_rhs_rational(N, a, b, c, d, e, opts.drop_prefactor);
            QPoly cl = qp_mul(lhs.num, qp_expand(rhs.den));
            QPoly cr = qp_mul(rhs.num, qp_expand(lhs.den));
            if (!(cl == cr)) {
                rep.ok = false;
                rep.trials_run += 1;
                return rep;
            }
            rep.trials_run += 1;
        } catch (const SingularDraw&) {
            rep.resamples += 1;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace qsc
