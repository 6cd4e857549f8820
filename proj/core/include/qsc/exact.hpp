#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP-backed) plus p-adic valuation and canonical residues.

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qsc {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic primality by trial division. Intended for the small
/// primes used in congruence checks (p < 100 in practice).
inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

/// v_p(n) for a nonzero integer.
inline long padic_valuation(const Int& n, long p) {
    if (n == 0) throw std::domain_error("valuation of zero undefined");
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    Int m = abs(n), q, r;
    long v = 0;
    for (;;) {
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

/// v_p(x) = v_p(num) - v_p(den). Negative for non-p-integral x.
inline long padic_valuation(const Rat& x, long p) {
    if (x == 0) throw std::domain_error("valuation of zero undefined");
    long vn = x.get_num() == 0 ? 0 : padic_valuation(Int(x.get_num()), p);
    long vd = padic_valuation(Int(x.get_den()), p);
    return vn - vd;
}

/// Canonical residue of a p-integral rational modulo p^r, in [0, p^r).
inline Int rational_mod_prime_power(const Rat& x, long p, long r) {
    if (!is_prime(p)) throw std::domain_error("p must be prime");
    if (r < 1) throw std::domain_error("r must be positive");
    Int pr;
    mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(r));
    Int den = x.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("not p-integral");
    Int deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), pr.get_mpz_t()) == 0)
        throw std::domain_error("not p-integral");
    Int res = Int(x.get_num()) * deninv;
    mpz_mod(res.get_mpz_t(), res.get_mpz_t(), pr.get_mpz_t());
    return res;
}

/// (base)_len = base (base+1) ... (base+len-1), exact.
inline Rat pochhammer_rational(const Rat& base, unsigned long len) {
    Rat v = 1;
    Rat t = base;
    for (unsigned long j = 0; j < len; ++j, t += 1) v *= t;
    return v;
}

/// n! as an exact integer.
inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace qsc
