#pragma once

// Terminating Watson 8phi7 -> 4phi3 transformation, checked two ways:
// fully symbolic in six variables for small truncations, and by repeated
// exact-rational specialization (q kept symbolic) for larger ones.
// The infinite-product prefactor telescopes under f = q^{-N} to
// (aq;q)_N (aq/de;q)_N / ((aq/d;q)_N (aq/e;q)_N).

#include <cstdint>
#include <random>

namespace qsc {

struct WatsonOptions {
    bool drop_prefactor = false; // negative control: omit the RHS prefactor
};

/// Cross-multiplied symbolic equality of both sides in
/// Z[q^+-, a^+-, b^+-, c^+-, d^+-, e^+-]. Practical for N <= 2.
bool watson_check_symbolic(unsigned N, const WatsonOptions& opts = {});

struct WatsonRandomReport {
    bool ok = false;
    unsigned trials_run = 0;
    unsigned resamples = 0;
};

/// trials independent exact-rational specializations of (a, b, c, d, e)
/// with q symbolic; singular draws are resampled (bounded budget).
/// Throws std::runtime_error if the resample budget is exhausted.
WatsonRandomReport watson_check_random(unsigned N, unsigned trials, uint64_t seed,
                                       const WatsonOptions& opts = {});

} // namespace qsc
