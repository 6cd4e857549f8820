#pragma once

// Exact q -> 1 side of the story: the classical supercongruences checked
// with exact rationals and p-adic valuations, the eta-product coefficient
// a_p computed by truncated expansion, and Morita's p-adic Gamma at small
// primes.

#include "qsc/exact.hpp"

#include <vector>

namespace qsc {

struct ClassicalResult {
    std::string claim;
    long p = 0;
    bool pass = false;
    long required_valuation = 0;
    long observed_valuation = 0; // LONG_MAX-like sentinel when difference is 0
    bool strengthened = false;   // mod p^4 case of the central-binomial sum
    double ms = 0.0;
};

/// sum_{k=0}^{(p-1)/2} (4k+1) (1/2)_k^4 / k!^4 = p (mod p^3); also reports
/// whether the stronger mod p^4 congruence holds.
ClassicalResult check_c2(long p);

/// p-th coefficient of q prod (1-q^{2n})^4 (1-q^{4n})^4, by exact truncated
/// expansion to order T >= p.
Int eta_coefficient(long p, long T);

/// sum_{k=0}^{(p-1)/2} (1/2)_k^4 / k!^4 = a_p (mod p^3).
ClassicalResult check_m2(long p);

/// sum_{k=0}^{(p-1)/2} (4k+1) (1/2)_k^6 / k!^6 = p a_p (mod p^4).
ClassicalResult check_1_4(long p);

/// Morita's Gamma_p(x) mod p^N for p-integral rational x:
/// Gamma_p(t) = (-1)^t prod_{0<j<t, p does not divide j} j at the residue
/// t of x modulo p^N, reduced incrementally.
Int padic_gamma(long p, const Rat& x, long N);

/// sum_{k=0}^{p-1} (6k+1) (1/3)_k^6 / k!^6 against -p Gamma_p(1/3)^9
/// (p = 1 mod 6) or -(10/27) p^4 Gamma_p(1/3)^9 (p = 5 mod 6), mod p^6.
ClassicalResult check_1_2(long p);

} // namespace qsc
