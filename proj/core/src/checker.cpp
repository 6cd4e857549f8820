#include "qsc/checker.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace qsc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string coprimality_line(const FactoredProduct& den, unsigned s) {
    std::ostringstream os;
    os << "Phi_" << s << ": denominator coprime (" << den.atom_count() << " atoms certified)";
    return os.str();
}

std::string valuation_line(const FactoredProduct& den, unsigned s, unsigned shared) {
    std::ostringstream os;
    os << "Phi_" << s << ": " << den.atom_count() - shared
       << " denominator atoms certified coprime, " << shared
       << " pure-q factors carry Phi_" << s << " and are absorbed into the division";
    return os.str();
}

void require_coprime(const FactoredProduct& den, unsigned s, const std::string& what) {
    if (!den.coprime_to_cyclotomic(s)) {
        for (const auto& [a, m] : den.atoms()) {
            if (!atom_coprime_to_cyclotomic(a, s)) {
                Expo<4> e = a.e;
                throw CertificateError(what + ": denominator atom (1 - " +
                                       LaurentPoly::monomial(e).to_string() +
                                       ") shares the factor Phi_" + std::to_string(s));
            }
        }
        throw CertificateError(what + ": coprimality certificate failed for Phi_" +
                               std::to_string(s));
    }
}

/// Divide a polynomial in c (no negative c-exponents) by (c - q^E):
/// synthetic division; remainder is the value at c = q^E.
std::pair<LaurentPoly, LaurentPoly> divrem_by_c_minus_qpow(const LaurentPoly& p, long E) {
    if (p.is_zero()) return {{}, {}};
    if (p.min_exp(VAR_C) < 0)
        throw std::invalid_argument("dividend has negative c-exponents; clear c-units first");
    const int32_t deg = p.max_exp(VAR_C);

    std::vector<std::vector<LaurentPoly::Term>> buckets(deg + 1);
    for (const auto& [e, c] : p.terms()) {
        Expo<4> rest = e;
        rest[VAR_C] = 0;
        buckets[e[VAR_C]].emplace_back(rest, c);
    }
    std::vector<LaurentPoly> coeffs(deg + 1);
    for (int32_t i = 0; i <= deg; ++i)
        coeffs[i] = LaurentPoly::from_terms(std::move(buckets[i]));

    Expo<4> u{};
    u[VAR_Q] = static_cast<int32_t>(E);

    std::vector<LaurentPoly> quot(deg);
    LaurentPoly carry = std::move(coeffs[deg]);
    for (int32_t i = deg - 1; i >= 0; --i) {
        quot[i] = carry;
        carry.mul_monomial(u);
        carry.add_scaled(coeffs[i], Int(1));
    }
    LaurentPoly rem = std::move(carry);

    std::vector<LaurentPoly::Term> all;
    for (int32_t i = 0; i < deg; ++i) {
        for (const auto& [e, c] : quot[i].terms()) {
            Expo<4> shifted = e;
            shifted[VAR_C] = i;
            all.emplace_back(shifted, c);
        }
    }
    return {LaurentPoly::from_terms(std::move(all)), std::move(rem)};
}

std::string claim_id(const std::string& family, unsigned n, unsigned d, int r, long M) {
    std::ostringstream os;
    os << family << "/n=" << n << "/d=" << d;
    if (r != 0) os << "/r=" << r;
    if (M >= 0) os << "/M=" << M;
    return os.str();
}

} // namespace

Verdict check(const CongruenceClaim& claim) {
    const auto t0 = Clock::now();
    Verdict v;
    v.family = family_name(claim.spec.family);
    v.n = claim.spec.n;
    v.d = claim.spec.d;
    v.r = claim.spec.r;
    v.m_upper = claim.spec.M;
    v.modulus = claim.modulus.to_string();
    v.id = claim_id(v.family, v.n, v.d, v.r, v.m_upper) + "/mod=" + v.modulus;

    Assembled sum = assemble(claim.spec);
    v.num_terms = sum.num.num_terms();
    v.max_q_degree = sum.max_q_degree;

    // The sum is N / (unit * D) with D a product of certified atoms, so
    // Phi_s-divisibility of the sum to order e is equivalent to
    // Phi_s^{e + v} | N where v is the exact multiplicity of Phi_s in D.
    v.holds = true;
    LaurentPoly quotient = sum.num;
    for (auto [s, e] : claim.modulus.factors) {
        const unsigned shared = sum.den.cyclotomic_multiplicity(s);
        v.coprimality.push_back(valuation_line(sum.den, s, shared));
        const unsigned required = e + shared;
        const UniPoly& phi = cyclotomic(s);
        for (unsigned i = 1; i <= required; ++i) {
            auto [q, rem] = divrem_by_unipoly_in_q(quotient, phi);
            if (!rem.is_zero()) {
                v.holds = false;
                std::ostringstream os;
                os << "Phi_" << s << " (power " << i << " of " << required;
                if (shared) os << ", " << shared << " absorbed by the denominator";
                os << ")";
                v.failing_factor = os.str();
                break;
            }
            quotient = std::move(q);
        }
        if (!v.holds) break;
    }
    v.ms = ms_since(t0);
    return v;
}

Verdict check_mixed(unsigned n, unsigned d, int r, unsigned M) {
    const auto t0 = Clock::now();
    const long E = static_cast<long>(d) * n - n;

    Verdict v;
    v.family = "proof2.7";
    v.n = n;
    v.d = d;
    v.r = r;
    v.m_upper = M;
    {
        std::ostringstream os;
        os << "(c - q^" << E << ")*Phi_" << n;
        v.modulus = os.str();
    }
    v.id = claim_id(v.family, n, d, r, M) + "/mod=" + v.modulus;

    auto [lhs, rhs] = proof_identity_2_6(n, d, r, M, /*symbolic_c=*/true);

    for (const auto* side : {&lhs, &rhs}) {
        require_coprime(side->den, n, v.id);
        if (!side->den.coprime_to_c_minus_q_power(E))
            throw CertificateError(v.id + ": denominator shares a factor with (c - q^E)");
    }
    v.coprimality.push_back(coprimality_line(lhs.den, n));
    v.coprimality.push_back(coprimality_line(rhs.den, n));

    // cross-multiplied difference, with each side's removed unit restored;
    // the denominators' common atoms are coprime to both modulus factors
    // (certified above), so they are cancelled before multiplying
    FactoredProduct shared = FactoredProduct::common_atoms(lhs.den, rhs.den);
    FactoredProduct lden = FactoredProduct::divide_exact(lhs.den, shared);
    FactoredProduct rden = FactoredProduct::divide_exact(rhs.den, shared);
    LaurentPoly cl = multiplied(rden, lhs.num);
    {
        Expo<4> shift{};
        shift[VAR_Q] = lhs.q_shift;
        cl.mul_monomial(shift);
    }
    LaurentPoly cr = multiplied(lden, rhs.num);
    {
        Expo<4> shift{};
        shift[VAR_Q] = rhs.q_shift;
        cr.mul_monomial(shift);
    }
    LaurentPoly delta = cl - cr;
    v.num_terms = delta.num_terms();

    v.holds = true;
    if (!delta.is_zero()) {
        delta.clear_units(VAR_Q);
        delta.clear_units(VAR_C);
        v.max_q_degree = delta.max_exp(VAR_Q);
        auto [quot, rem] = divrem_by_c_minus_qpow(delta, E);
        if (!rem.is_zero()) {
            v.holds = false;
            v.failing_factor = "MIXED (c - q^" + std::to_string(E) + ")";
        } else {
            auto [cleared, sh] = clear_q_units(std::move(quot));
            auto [q2, rem2] = divrem_by_unipoly_in_q(cleared, cyclotomic(n));
            if (!rem2.is_zero()) {
                v.holds = false;
                v.failing_factor = "Phi_" + std::to_string(n);
            }
        }
    } else {
        v.note = "difference vanished identically";
    }
    v.ms = ms_since(t0);
    return v;
}

Verdict check_lemma_2_1(unsigned n, unsigned d, int r, unsigned m, unsigned k) {
    const auto t0 = Clock::now();
    if (m < 1 || m > n - 1) throw std::invalid_argument("require 1 <= m <= n-1");
    if ((static_cast<long>(d) * m + r) % static_cast<long>(n) != 0)
        throw std::invalid_argument("require d m = -r (mod n)");
    if (k > m) throw std::invalid_argument("require 0 <= k <= m");
    const long mexp_num = static_cast<long>(m) * (static_cast<long>(d) * m - d + 2 * r);
    if (mexp_num % 2 != 0)
        throw std::invalid_argument("skipped: exponent m(dm-d+2r)/2 not integral");
    const long mexp = mexp_num / 2;

    Verdict v;
    v.family = "lemma2.1";
    v.n = n;
    v.d = d;
    v.r = r;
    v.m_upper = m;
    v.modulus = "Phi_" + std::to_string(n);
    {
        std::ostringstream os;
        os << "lemma2.1/n=" << n << "/d=" << d << "/r=" << r << "/m=" << m << "/k=" << k;
        v.id = os.str();
    }

    Expo<4> base_num{};
    base_num[VAR_Q] = r;
    base_num[VAR_A] = 1; // a q^r
    Expo<4> base_den{};
    base_den[VAR_Q] = static_cast<int32_t>(d);
    base_den[VAR_A] = -1; // q^d / a

    FactoredProduct den_l = FactoredProduct::pochhammer(base_den, d, m - k);
    FactoredProduct den_r = FactoredProduct::pochhammer(base_den, d, k);
    require_coprime(den_l, n, v.id);
    require_coprime(den_r, n, v.id);
    v.coprimality.push_back(coprimality_line(den_l, n));
    v.coprimality.push_back(coprimality_line(den_r, n));

    LaurentPoly lhs = (FactoredProduct::pochhammer(base_num, d, m - k) * den_r).expand();
    LaurentPoly rhs = (FactoredProduct::pochhammer(base_num, d, k) * den_l).expand();
    {
        Expo<4> mono{};
        mono[VAR_A] = static_cast<int32_t>(m) - 2 * static_cast<int32_t>(k);
        mono[VAR_Q] = static_cast<int32_t>(mexp + static_cast<long>(d - r) * k);
        const bool negative = ((static_cast<long>(m) - 2L * k) % 2 + 2) % 2 == 1;
        rhs.mul_monomial(mono, Int(negative ? -1 : 1));
    }
    LaurentPoly delta = lhs - rhs;
    v.num_terms = delta.num_terms();

    v.holds = true;
    if (!delta.is_zero()) {
        delta.clear_units(VAR_Q);
        v.max_q_degree = delta.max_exp(VAR_Q);
        auto [q, rem] = divrem_by_unipoly_in_q(delta, cyclotomic(n));
        if (!rem.is_zero()) {
            v.holds = false;
            v.failing_factor = "Phi_" + std::to_string(n);
        }
    }
    v.ms = ms_since(t0);
    return v;
}

std::string grid_family_name(GridFamily f) {
    switch (f) {
        case GridFamily::Thm1_1: return "thm1.1";
        case GridFamily::Thm1_2: return "thm1.2";
        case GridFamily::Eq1_5: return "eq1.5";
        case GridFamily::Lemma2_1: return "lemma2.1";
        case GridFamily::Lemma2_2: return "lemma2.2";
        case GridFamily::Thm2_3: return "thm2.3";
        case GridFamily::Proof2_7: return "proof2.7";
    }
    return "?";
}

std::optional<GridFamily> grid_family_from_name(const std::string& name) {
    for (GridFamily f : {GridFamily::Thm1_1, GridFamily::Thm1_2, GridFamily::Eq1_5,
                         GridFamily::Lemma2_1, GridFamily::Lemma2_2, GridFamily::Thm2_3,
                         GridFamily::Proof2_7})
        if (grid_family_name(f) == name) return f;
    return std::nullopt;
}

namespace {

ModulusSpec mod_bracket_n(unsigned n) {
    ModulusSpec m;
    for (unsigned s : proper_cyclotomic_indices(n)) m.factors.emplace_back(s, 1);
    return m;
}

ModulusSpec mod_bracket_n_phi_n(unsigned n) {
    ModulusSpec m = mod_bracket_n(n);
    for (auto& [s, e] : m.factors)
        if (s == n) e = 2;
    return m;
}

std::vector<Verdict> run_jobs(std::vector<std::function<Verdict()>> jobs, unsigned njobs) {
    std::vector<Verdict> out(jobs.size());
    if (njobs <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                out[i] = jobs[i]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < njobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

} // namespace

std::vector<Verdict> run_grid(GridFamily family, const GridOptions& opts) {
    std::vector<std::function<Verdict()>> jobs;

    auto add_claim = [&](SumSpec spec, ModulusSpec mod) {
        if (opts.mutation == Mutation::BumpQExponent)
            spec.mono_bump = spec.r * opts.mutation_strength;
        jobs.push_back([spec = std::move(spec), mod = std::move(mod)] {
            return check(CongruenceClaim{spec, mod});
        });
    };

    for (unsigned n = opts.n_lo; n <= opts.n_hi; ++n) {
        for (unsigned d : opts.d_set) {
            if (std::gcd(n, d) != 1) continue;
            switch (family) {
                case GridFamily::Thm1_1: {
                    ModulusSpec mod = modulus_for_theorem(n, d, TheoremCase::Thm1_1);
                    if (opts.mutation == Mutation::InflateModulus && n % d != d - 1)
                        mod.factors = {{n, 3}};
                    add_claim(make_spec(Family::Thm1_1, n, d), std::move(mod));
                    break;
                }
                case GridFamily::Thm1_2: {
                    if (n < 2) break;
                    ModulusSpec mod = modulus_for_theorem(n, d, TheoremCase::Thm1_2);
                    if (opts.mutation == Mutation::InflateModulus && n % d != 1)
                        mod.factors = {{n, 3}};
                    add_claim(make_spec(Family::Thm1_2, n, d), std::move(mod));
                    break;
                }
                case GridFamily::Eq1_5: {
                    ModulusSpec mod;
                    mod.factors = {{n, n % d == d - 1 ? 2u : 1u}};
                    if (opts.mutation == Mutation::InflateModulus && n % d != d - 1)
                        mod.factors = {{n, 3}};
                    add_claim(make_spec(Family::Eq1_5, n, d), std::move(mod));
                    break;
                }
                case GridFamily::Lemma2_2: {
                    for (int r : opts.r_set) {
                        unsigned m = lemma_truncation(n, d, r);
                        std::vector<unsigned> Ms{m};
                        if (n - 1 != m) Ms.push_back(n - 1);
                        for (unsigned M : Ms)
                            add_claim(make_spec(Family::Lemma2_2, n, d, r, M),
                                      mod_bracket_n(n));
                    }
                    break;
                }
                case GridFamily::Thm2_3: {
                    for (int r : opts.r_set) {
                        long res = ((-r) % static_cast<long>(d) + d) % d;
                        if (n % d != static_cast<unsigned>(res) || n < 2) continue;
                        long num = static_cast<long>(d) * n - n - r;
                        std::vector<unsigned> Ms;
                        if (num % d == 0) Ms.push_back(static_cast<unsigned>(num / d));
                        if (Ms.empty() || Ms[0] != n - 1) Ms.push_back(n - 1);
                        for (unsigned M : Ms)
                            add_claim(make_spec(Family::Thm2_3, n, d, r, M),
                                      mod_bracket_n_phi_n(n));
                    }
                    break;
                }
                case GridFamily::Lemma2_1: {
                    for (int r : opts.r_set) {
                        unsigned m = lemma_truncation(n, d, r);
                        if (m < 1) continue;
                        for (unsigned k = 0; k <= m; ++k) {
                            jobs.push_back([n, d, r, m, k]() -> Verdict {
                                try {
                                    return check_lemma_2_1(n, d, r, m, k);
                                } catch (const std::invalid_argument& ex) {
                                    std::string what = ex.what();
                                    if (what.rfind("skipped:", 0) == 0) {
                                        Verdict v;
                                        v.family = "lemma2.1";
                                        v.n = n;
                                        v.d = d;
                                        v.r = r;
                                        v.m_upper = m;
                                        v.holds = true;
                                        v.note = what;
                                        std::ostringstream os;
                                        os << "lemma2.1/n=" << n << "/d=" << d << "/r=" << r
                                           << "/m=" << m << "/k=" << k;
                                        v.id = os.str();
                                        return v;
                                    }
                                    throw;
                                }
                            });
                        }
                    }
                    break;
                }
                case GridFamily::Proof2_7: {
                    for (int r : opts.r_set) {
                        long res = ((-r) % static_cast<long>(d) + d) % d;
                        if (n % d != static_cast<unsigned>(res) || n < 2) continue;
                        long num = static_cast<long>(d) * n - n - r;
                        std::vector<unsigned> Ms;
                        if (num % d == 0) Ms.push_back(static_cast<unsigned>(num / d));
                        if (Ms.empty() || Ms[0] != n - 1) Ms.push_back(n - 1);
                        for (unsigned M : Ms)
                            jobs.push_back([n, d, r, M] { return check_mixed(n, d, r, M); });
                    }
                    break;
                }
            }
        }
    }
    return run_jobs(std::move(jobs), opts.jobs);
}

} // namespace qsc
