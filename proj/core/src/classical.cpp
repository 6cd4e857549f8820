#include "qsc/classical.hpp"

#include <chrono>
#include <climits>
#include <stdexcept>

namespace qsc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

long valuation_or_max(const Rat& x, long p) {
    return x == 0 ? LONG_MAX : padic_valuation(x, p);
}

Rat half() {
    Rat h(1, 2);
    return h;
}

// sum_{k=0}^{(p-1)/2} (4k+1)^{use_4k1} (1/2)_k^pow / k!^pow
Rat central_sum(long p, int pow, bool use_4k1) {
    Rat sum = 0;
    Rat poch = 1; // (1/2)_k
    Int fact = 1; // k!
    for (long k = 0; k <= (p - 1) / 2; ++k) {
        if (k > 0) {
            poch *= half() + Rat(k - 1);
            fact *= k;
        }
        Rat ratio = poch / Rat(fact);
        Rat term = 1;
        for (int i = 0; i < pow; ++i) term *= ratio;
        if (use_4k1) term *= Rat(4 * k + 1);
        sum += term;
    }
    return sum;
}

} // namespace

ClassicalResult check_c2(long p) {
    const auto t0 = Clock::now();
    if (!is_prime(p) || p <= 3) throw std::invalid_argument("require prime p > 3");
    ClassicalResult r;
    r.claim = "c2";
    r.p = p;
    r.required_valuation = 3;
    Rat lhs = central_sum(p, 4, true);
    r.observed_valuation = valuation_or_max(lhs - Rat(p), p);
    r.pass = r.observed_valuation >= 3;
    r.strengthened = r.observed_valuation >= 4;
    r.ms = ms_since(t0);
    return r;
}

Int eta_coefficient(long p, long T) {
    if (p < 1) throw std::invalid_argument("require p >= 1");
    if (T < p) throw std::invalid_argument("truncation order below requested index");
    // coefficients of prod (1-q^{2n})^4 (1-q^{4n})^4 up to degree T-1,
    // then shift by the leading q
    std::vector<Int> c(T, Int(0));
    c[0] = 1;
    auto mul_one_minus_qm = [&](long m) {
        for (long i = T - 1; i >= m; --i) c[i] -= c[i - m];
    };
    for (long n = 1; 2 * n < T; ++n)
        for (int rep = 0; rep < 4; ++rep) mul_one_minus_qm(2 * n);
    for (long n = 1; 4 * n < T; ++n)
        for (int rep = 0; rep < 4; ++rep) mul_one_minus_qm(4 * n);
    return c[p - 1];
}

ClassicalResult check_m2(long p) {
    const auto t0 = Clock::now();
    if (!is_prime(p) || p <= 3) throw std::invalid_argument("require prime p > 3");
    ClassicalResult r;
    r.claim = "m2";
    r.p = p;
    r.required_valuation = 3;
    Rat lhs = central_sum(p, 4, false);
    Int ap = eta_coefficient(p, p + 1);
    r.observed_valuation = valuation_or_max(lhs - Rat(ap), p);
    r.pass = r.observed_valuation >= 3;
    r.ms = ms_since(t0);
    return r;
}

ClassicalResult check_1_4(long p) {
    const auto t0 = Clock::now();
    if (!is_prime(p) || p <= 3) throw std::invalid_argument("require prime p > 3");
    ClassicalResult r;
    r.claim = "eq1.4";
    r.p = p;
    r.required_valuation = 4;
    Rat lhs = central_sum(p, 6, true);
    Int ap = eta_coefficient(p, p + 1);
    r.observed_valuation = valuation_or_max(lhs - Rat(p) * Rat(ap), p);
    r.pass = r.observed_valuation >= 4;
    r.ms = ms_since(t0);
    return r;
}

Int padic_gamma(long p, const Rat& x, long N) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (N < 1) throw std::invalid_argument("precision must be positive");
    Int pN;
    mpz_ui_pow_ui(pN.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N));
    Int t = rational_mod_prime_power(x, p, N); // throws unless x is p-integral

    Int acc = 1;
    for (Int j = 1; j < t; ++j) {
        if (j % p == 0) continue;
        acc = acc * j % pN;
    }
    if (mpz_odd_p(t.get_mpz_t())) acc = -acc;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), pN.get_mpz_t());
    return acc;
}

ClassicalResult check_1_2(long p) {
    const auto t0 = Clock::now();
    if (p != 5 && p != 7)
        throw std::invalid_argument("Gamma_p loop budget restricts eq1.2 to p in {5, 7}");
    ClassicalResult r;
    r.claim = "eq1.2";
    r.p = p;
    r.required_valuation = 6;

    Rat third(1, 3);
    Rat sum = 0;
    Rat poch = 1; // (1/3)_k
    Int fact = 1;
    for (long k = 0; k <= p - 1; ++k) {
        if (k > 0) {
            poch *= third + Rat(k - 1);
            fact *= k;
        }
        Rat ratio = poch / Rat(fact);
        Rat term = Rat(6 * k + 1);
        for (int i = 0; i < 6; ++i) term *= ratio;
        sum += term;
    }

    Int g = padic_gamma(p, third, 6);
    Rat g9(g);
    Rat gpow = 1;
    for (int i = 0; i < 9; ++i) gpow *= g9;

    Rat rhs;
    if (p % 6 == 1) {
        rhs = -Rat(p) * gpow;
    } else {
        Rat p4 = Rat(p) * Rat(p) * Rat(p) * Rat(p);
        rhs = -(Rat(10, 27) * p4) * gpow;
    }
    r.observed_valuation = valuation_or_max(sum - rhs, p);
    r.pass = r.observed_valuation >= 6;
    r.ms = ms_since(t0);
    return r;
}

} // namespace qsc
