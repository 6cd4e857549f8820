#pragma once

// Builders for the truncated q-hypergeometric sums under test: the
// three-parameter generic summand, its theorem-level specializations, and
// the two sides of the transformed identity with the mixed modulus.
// A sum is assembled over the common denominator of its last term, which
// every earlier denominator divides factorwise.

#include "qsc/factored.hpp"
#include "qsc/lpoly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace qsc {

enum class Family {
    Thm1_1,      // two-parameter sum, r = +1, c = 1
    Thm1_2,      // two-parameter sum, r = -1, c = 1
    Eq1_5,       // one-parameter specialization b = 1 of Thm1_1
    Lemma2_2,    // generic three-parameter sum, c symbolic
    Thm2_3,      // generic sum with c = 1, truncations M = (dn-n-r)/d and n-1
    Proof2_6Lhs, // generic sum, c symbolic (or c = q^{dn-n})
    Proof2_6Rhs  // transformed side: bracket prefactor times 4phi3-style sum
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// How the c parameter is specialized when terms are built.
enum class CMode { Symbolic, One, PowQ };

struct SumSpec {
    Family family;
    unsigned n = 1;
    unsigned d = 3;
    int r = 1;
    unsigned M = 0;       // upper summation index
    CMode c_mode = CMode::One;
    bool b_symbolic = true;
    long c_pow = 0;       // exponent E of c -> q^E when c_mode == PowQ
    int mono_bump = 0;    // mutation hook: added to the 2d-3r exponent coefficient
};

/// m in [0, n-1] with d m = -r (mod n); requires gcd(n, d) = 1.
unsigned lemma_truncation(unsigned n, unsigned d, int r);

/// Validated spec for a family. M defaults to the family's standard
/// truncation (n-1); pass an explicit M for the alternative truncations
/// of Lemma 2.2 and the transformed identity.
SumSpec make_spec(Family f, unsigned n, unsigned d, int r = 1,
                  std::optional<unsigned> M = std::nullopt);

struct TermRatio {
    LaurentPoly bracket;  // the [2dk+r] factor (or 1)
    FactoredProduct num;
    FactoredProduct den;
    Expo<4> mono{};       // monomial multiplier, e.g. (c q^{2d-3r})^k
};

/// The exact k-th summand of the family, 0 <= k <= M.
TermRatio term(const SumSpec& spec, unsigned k);

struct Assembled {
    LaurentPoly num;       // q-units cleared
    FactoredProduct den;   // common denominator (atoms of the top term)
    int32_t q_shift = 0;   // numerator unit q-power removed
    size_t terms_built = 0;
    int32_t max_q_degree = 0;

    /// The represented value is num * q^{q_shift} / expand(den).
    LaurentPoly cross_numerator() const { return num; }
};

/// Common-denominator assembly of sum_{k=0}^{M} term(spec, k). The
/// denominator is the k = M denominator (plus the prefactor denominator
/// for the transformed side); each den_k divides it factorwise.
Assembled assemble(const SumSpec& spec);

/// Both sides of the transformed identity: the c-symbolic generic sum and
/// the bracket-prefactored 4phi3-style sum. With symbolic_c the pair is
/// congruent modulo (c - q^{dn-n}) Phi_n(q); with c -> q^{dn-n} it is an
/// exact identity.
std::pair<Assembled, Assembled>
proof_identity_2_6(unsigned n, unsigned d, int r, unsigned M, bool symbolic_c);

/// Least k >= 1 such that (q^x; q^d)_k vanishes modulo Phi_n, i.e. one
/// past the least j >= 0 with x + d j = 0 (mod n); NONE if unreachable.
std::optional<unsigned> min_vanishing_index(long x, unsigned d, unsigned n);

} // namespace qsc
