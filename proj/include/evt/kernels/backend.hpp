#pragma once

#include <cstdint>
#include <string_view>

#include "evt/cases.hpp"

namespace evt::kernels {

// Runtime-selected implementation of the per-repetition draw/maximum kernel.
// `automatic` picks the widest lane the CPU supports; the scalar path is the
// normative reference and every other backend must match it bit for bit.
enum class Backend : std::uint8_t { automatic, scalar, avx2 };

bool avx2_supported();
Backend resolve(Backend requested);
std::string_view name(Backend resolved);

// Maximum of the case statistic over n pairs drawn from the (seed, rep)
// substream. The result is a pure function of (c, seed, rep, n).
double rep_maximum(Case c, std::uint64_t seed, std::uint64_t rep, std::int64_t n,
                   Backend backend = Backend::automatic);

double rep_maximum_scalar(Case c, std::uint64_t seed, std::uint64_t rep,
                          std::int64_t n);
#if defined(__x86_64__) || defined(_M_X64)
double rep_maximum_avx2(Case c, std::uint64_t seed, std::uint64_t rep,
                        std::int64_t n);
// Batch primitives exposed for the equivalence tests.
void philox_bits_avx2(std::uint64_t seed, std::uint64_t rep, std::uint64_t blk0,
                      std::size_t nblocks, std::uint64_t* ux, std::uint64_t* uy);
void normal_quantile_avx2(const double* p, double* z, std::size_t n);
#endif

} // namespace evt::kernels
