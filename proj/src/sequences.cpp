#include "evt/sequences.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "evt/distributions.hpp"
#include "evt/numerics.hpp"

namespace evt {

namespace {

// (g1): a = 1/sqrt(2 log m), b = sqrt(2 log m) + delta,
// delta = -log(4 pi log m) / (2 sqrt(2 log m)).
NormSeq normal_family(Case label, std::uint64_t n, double m) {
    const double L = std::log(m);
    const double s = std::sqrt(2.0 * L);
    const double delta = -std::log(4.0 * M_PI * L) / (2.0 * s);
    return NormSeq{label, n, 1.0 / s, s + delta, delta};
}

// (g3): a = 1/sqrt(log m), b = 2 sqrt(log m) + delta,
// delta = -log(4 pi log m) / (2 sqrt(log m)).
NormSeq sum_family(Case label, std::uint64_t n, double m) {
    const double L = std::log(m);
    const double s = std::sqrt(L);
    const double delta = -std::log(4.0 * M_PI * L) / (2.0 * s);
    return NormSeq{label, n, 1.0 / s, 2.0 * s + delta, delta};
}

// (g5): a = 1/sqrt(2 log m), b = sqrt(2 log m) + delta,
// delta = -log(pi log m) / sqrt(2 log m).
NormSeq diff_family(Case label, std::uint64_t n, double m) {
    const double L = std::log(m);
    const double s = std::sqrt(2.0 * L);
    const double delta = -std::log(M_PI * L) / s;
    return NormSeq{label, n, 1.0 / s, s + delta, delta};
}

} // namespace

NormSeq sequences(Case c, std::uint64_t n) {
    if (n < 2)
        throw std::domain_error("sequences: n must be >= 2, got " + std::to_string(n));
    const double m = static_cast<double>(n);
    switch (c) {
        case Case::normal: return normal_family(c, n, m);
        case Case::abs_normal: return normal_family(c, n, 2.0 * m);
        case Case::sum_normal: return sum_family(c, n, m);
        case Case::sum_abs: return sum_family(c, n, 4.0 * m);
        case Case::diff_abs: return diff_family(c, n, m);
        case Case::abs_diff_abs: return diff_family(c, n, 2.0 * m);
    }
    throw std::domain_error("sequences: unknown case");
}

NormSeq symmetrize(Case base, std::uint64_t n) {
    if (base != Case::normal && base != Case::diff_abs)
        throw std::domain_error(
            "symmetrize: base law must be symmetric (normal or diff-abs)");
    if (n < 1) throw std::domain_error("symmetrize: n must be >= 1");
    NormSeq seq = sequences(base, 2 * n);
    seq.source = base == Case::normal ? Case::abs_normal : Case::abs_diff_abs;
    seq.n = n;
    return seq;
}

double invert_tail(Case c, std::uint64_t n) {
    if (n < 2)
        throw std::domain_error("invert_tail: n must be >= 2");
    const double target = 1.0 / static_cast<double>(n);
    auto f = [c, target](double x) { return tail(c, x) - target; };
    return find_root(f, 0.0, 30.0, 1e-13);
}

} // namespace evt
