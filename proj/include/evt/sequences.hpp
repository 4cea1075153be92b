#pragma once

#include <cstdint>

#include "evt/cases.hpp"

namespace evt {

// Normalizing triple for (max - b) / a with the location split as
// b = leading term + delta, delta -> 0. `source` records which case the
// triple was derived for, so sample normalization can detect mismatches.
struct NormSeq {
    Case source;
    std::uint64_t n;
    double a;
    double b;
    double delta;
};

// Exact closed forms per case. Requires n >= 2 (the inner logarithms must
// be positive); throws std::domain_error otherwise. n is taken exactly up
// to 2^53; the logarithms are evaluated in double precision.
NormSeq sequences(Case c, std::uint64_t n);

// Symmetrization rule for a symmetric parent law: the sequences for |Z| at
// sample size n are the parent's at 2n. Only the two symmetric parents are
// accepted (normal, diff-abs); anything else throws std::domain_error.
NormSeq symmetrize(Case base, std::uint64_t n);

// The exact (1 - 1/n)-quantile U(n), found by bisecting tail = 1/n on
// [0, 30] to 1e-13. Valid for n >= 2 (every case tail at 30 is < 1e-38).
double invert_tail(Case c, std::uint64_t n);

} // namespace evt
