#pragma once

// Congruence verdict engine: certify the exact cyclotomic content of the
// assembled denominator atom-by-atom, then test exact divisibility of the
// numerator by each Phi_s^{e_s + v_s(den)} of the modulus, one power at a
// time. A certificate failure is an error (the method does not apply),
// never a FALSE verdict.

#include "qsc/qhyper.hpp"
#include "qsc/upoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qsc {

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CongruenceClaim {
    SumSpec spec;
    ModulusSpec modulus;
};

struct Verdict {
    std::string id;
    std::string family;
    unsigned n = 0, d = 0;
    int r = 0;
    long m_upper = -1;
    std::string modulus;
    bool holds = false;
    std::string failing_factor; // empty when holds
    std::vector<std::string> coprimality;
    size_t num_terms = 0;
    long max_q_degree = 0;
    double ms = 0.0;
    std::string note;
};

/// Assemble the claim's sum and test the numerator against every
/// Phi_s^{e_s} of the modulus by repeated exact division.
Verdict check(const CongruenceClaim& claim);

/// The mixed-modulus proof step: cross-multiplied difference of the two
/// sides of the transformed identity (c symbolic), divided first by
/// (c - q^{dn-n}) as a polynomial in c, then the quotient by Phi_n.
Verdict check_mixed(unsigned n, unsigned d, int r, unsigned M);

/// Term-flip congruence of Lemma 2.1 at one index k: cross-multiplied
/// difference of the two sides is divisible by Phi_n.
Verdict check_lemma_2_1(unsigned n, unsigned d, int r, unsigned m, unsigned k);

enum class Mutation { None, BumpQExponent, InflateModulus };

enum class GridFamily { Thm1_1, Thm1_2, Eq1_5, Lemma2_1, Lemma2_2, Thm2_3, Proof2_7 };

std::string grid_family_name(GridFamily f);
std::optional<GridFamily> grid_family_from_name(const std::string& name);

struct GridOptions {
    unsigned n_lo = 2, n_hi = 12;
    std::vector<unsigned> d_set{3, 4, 5};
    std::vector<int> r_set{1, -1};
    Mutation mutation = Mutation::None;
    int mutation_strength = 1; // escalation level for BumpQExponent
    unsigned jobs = 1;
};

/// Enumerate admissible (n, d, r) for the family and check every claim.
/// Deterministic ordering; individual FALSE results are verdicts.
std::vector<Verdict> run_grid(GridFamily family, const GridOptions& opts);

} // namespace qsc
