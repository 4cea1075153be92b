#pragma once

#include <bit>
#include <cstdint>

#include "evt/cases.hpp"

namespace evt::kernels {

inline double abs_bits(double x) {
    return std::bit_cast<double>(std::bit_cast<std::uint64_t>(x) &
                                 0x7fffffffffffffffULL);
}

// Matches VMAXPD semantics (ties resolve to the new candidate) so the scalar
// reference and the vector reduction agree bit for bit.
inline double max_acc(double acc, double z) { return acc > z ? acc : z; }

inline double statistic(Case c, double x, double y) {
    switch (c) {
        case Case::normal: return x;
        case Case::abs_normal: return abs_bits(x);
        case Case::sum_normal: return x - y;
        case Case::sum_abs: return abs_bits(x) + abs_bits(y);
        case Case::diff_abs: return abs_bits(x) - abs_bits(y);
        case Case::abs_diff_abs: return abs_bits(abs_bits(x) - abs_bits(y));
    }
    return x;
}

} // namespace evt::kernels
