#pragma once

#include <cstdint>
#include <utility>

#include "evt/kernels/fastmath.hpp"

// Philox4x32-10 counter-based generator (Salmon et al., SC'11 reference
// constants). A block is keyed by (seed, repetition index, block index):
// key = seed split into two 32-bit words, counter = (block, repetition).
// Streams for distinct repetitions never overlap, so repetitions can be
// computed in any order, on any number of workers, with identical output.

namespace evt::philox {

struct Block {
    std::uint32_t v[4];
};

inline constexpr std::uint32_t M0 = 0xD2511F53u;
inline constexpr std::uint32_t M1 = 0xCD9E8D57u;
inline constexpr std::uint32_t W0 = 0x9E3779B9u;
inline constexpr std::uint32_t W1 = 0xBB67AE85u;

inline Block block(std::uint64_t seed, std::uint64_t rep, std::uint64_t blk) {
    std::uint32_t c0 = static_cast<std::uint32_t>(blk);
    std::uint32_t c1 = static_cast<std::uint32_t>(blk >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(rep);
    std::uint32_t c3 = static_cast<std::uint32_t>(rep >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * c0;
        const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
        k0 += W0;
        k1 += W1;
    }
    return Block{{c0, c1, c2, c3}};
}

// One block yields one standard-normal pair: words (0,1) and (2,3) form two
// 64-bit uniforms, mapped through the inverse normal CDF.
inline std::pair<double, double> normal_pair(std::uint64_t seed, std::uint64_t rep,
                                             std::uint64_t blk) {
    const Block b = block(seed, rep, blk);
    const std::uint64_t ux =
        static_cast<std::uint64_t>(b.v[0]) | (static_cast<std::uint64_t>(b.v[1]) << 32);
    const std::uint64_t uy =
        static_cast<std::uint64_t>(b.v[2]) | (static_cast<std::uint64_t>(b.v[3]) << 32);
    return {detail::normal_quantile_core(detail::u64_to_unit_double(ux)),
            detail::normal_quantile_core(detail::u64_to_unit_double(uy))};
}

} // namespace evt::philox
