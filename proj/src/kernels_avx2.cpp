// AVX2 lane of the draw/maximum kernel. Operation-for-operation translation
// of the scalar reference (kernels/fastmath.hpp, kernels/philox.hpp,
// kernels/statistic.hpp): same constants, same Horner order, no FMA, so the
// results match the scalar path bit for bit. The equivalence suite enforces
// this; change both paths together or not at all.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "evt/kernels/backend.hpp"
#include "evt/kernels/fastmath.hpp"
#include "evt/kernels/philox.hpp"
#include "evt/kernels/statistic.hpp"

namespace evt::kernels {

namespace {

inline __m256i mask32() { return _mm256_set1_epi64x(0xffffffffLL); }

struct Bits4 {
    __m256i ux;
    __m256i uy;
};

// Philox4x32-10 for four consecutive blocks blk0 .. blk0+3.
inline Bits4 philox4(std::uint64_t seed, std::uint64_t rep, std::uint64_t blk0) {
    const __m256i m0 = _mm256_set1_epi64x(static_cast<long long>(philox::M0));
    const __m256i m1 = _mm256_set1_epi64x(static_cast<long long>(philox::M1));
    const __m256i w0 = _mm256_set1_epi64x(static_cast<long long>(philox::W0));
    const __m256i w1 = _mm256_set1_epi64x(static_cast<long long>(philox::W1));
    const __m256i msk = mask32();

    const __m256i blk = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(blk0)),
                                         _mm256_setr_epi64x(0, 1, 2, 3));
    __m256i c0 = _mm256_and_si256(blk, msk);
    __m256i c1 = _mm256_srli_epi64(blk, 32);
    __m256i c2 = _mm256_set1_epi64x(static_cast<long long>(rep & 0xffffffffULL));
    __m256i c3 = _mm256_set1_epi64x(static_cast<long long>(rep >> 32));
    __m256i k0 = _mm256_set1_epi64x(static_cast<long long>(seed & 0xffffffffULL));
    __m256i k1 = _mm256_set1_epi64x(static_cast<long long>(seed >> 32));

    for (int round = 0; round < 10; ++round) {
        const __m256i p0 = _mm256_mul_epu32(m0, c0);
        const __m256i p1 = _mm256_mul_epu32(m1, c2);
        const __m256i hi0 = _mm256_srli_epi64(p0, 32);
        const __m256i lo0 = _mm256_and_si256(p0, msk);
        const __m256i hi1 = _mm256_srli_epi64(p1, 32);
        const __m256i lo1 = _mm256_and_si256(p1, msk);
        c0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), k0);
        c1 = lo1;
        c2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), k1);
        c3 = lo0;
        k0 = _mm256_and_si256(_mm256_add_epi64(k0, w0), msk);
        k1 = _mm256_and_si256(_mm256_add_epi64(k1, w1), msk);
    }
    return Bits4{_mm256_or_si256(c0, _mm256_slli_epi64(c1, 32)),
                 _mm256_or_si256(c2, _mm256_slli_epi64(c3, 32))};
}

// (u >> 12) * 2^-52 + 2^-53, with the integer->double conversion done by the
// exact 2^52-bias trick.
inline __m256d unit_double(__m256i u) {
    const __m256i bias = _mm256_set1_epi64x(0x4330000000000000LL);
    const __m256i m = _mm256_srli_epi64(u, 12);
    const __m256d d = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(m, bias)),
                                    _mm256_set1_pd(0x1.0p52));
    return _mm256_add_pd(_mm256_mul_pd(d, _mm256_set1_pd(0x1.0p-52)),
                         _mm256_set1_pd(0x1.0p-53));
}

inline __m256d abs_pd(__m256d x) {
    return _mm256_and_pd(x, _mm256_castsi256_pd(
                                _mm256_set1_epi64x(0x7fffffffffffffffLL)));
}

inline __m256d neg_pd(__m256d x) {
    return _mm256_xor_pd(x, _mm256_set1_pd(-0.0));
}

// detail::portable_log, lane-wise.
inline __m256d log_pd(__m256d x) {
    const __m256i offset = _mm256_set1_epi64x(0x3fe6a09e667f3bcdLL);
    const __m256i manmask = _mm256_set1_epi64x(0x000fffffffffffffLL);

    const __m256i ix = _mm256_castpd_si256(x);
    const __m256i tmp = _mm256_sub_epi64(ix, offset);
    // k = (int32)(tmp >> 32) >> 20, then to double.
    const __m256i hi = _mm256_srli_epi64(tmp, 32);
    const __m256i k32 = _mm256_srai_epi32(hi, 20);
    const __m256i packed = _mm256_permutevar8x32_epi32(
        k32, _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0));
    const __m256d dk = _mm256_cvtepi32_pd(_mm256_castsi256_si128(packed));
    const __m256d m = _mm256_castsi256_pd(
        _mm256_add_epi64(_mm256_and_si256(tmp, manmask), offset));

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d f = _mm256_sub_pd(m, one);
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
    const __m256d z = _mm256_mul_pd(s, s);
    const __m256d w = _mm256_mul_pd(z, z);

    const __m256d Lg1 = _mm256_set1_pd(6.666666666666735130e-01);
    const __m256d Lg2 = _mm256_set1_pd(3.999999999940941908e-01);
    const __m256d Lg3 = _mm256_set1_pd(2.857142874366239149e-01);
    const __m256d Lg4 = _mm256_set1_pd(2.222219843214978396e-01);
    const __m256d Lg5 = _mm256_set1_pd(1.818357216161805012e-01);
    const __m256d Lg6 = _mm256_set1_pd(1.531383769920937332e-01);
    const __m256d Lg7 = _mm256_set1_pd(1.479819860511658591e-01);
    const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);

    // t1 = w*(Lg2 + w*(Lg4 + w*Lg6)); t2 = z*(Lg1 + w*(Lg3 + w*(Lg5 + w*Lg7)))
    const __m256d t1 = _mm256_mul_pd(
        w, _mm256_add_pd(Lg2, _mm256_mul_pd(
                                  w, _mm256_add_pd(Lg4, _mm256_mul_pd(w, Lg6)))));
    const __m256d t2 = _mm256_mul_pd(
        z, _mm256_add_pd(
               Lg1, _mm256_mul_pd(
                        w, _mm256_add_pd(
                               Lg3, _mm256_mul_pd(
                                        w, _mm256_add_pd(
                                               Lg5, _mm256_mul_pd(w, Lg7)))))));
    const __m256d r = _mm256_add_pd(t2, t1);
    const __m256d hfsq =
        _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(0.5), f), f);

    // dk*ln2_hi - ((hfsq - (s*(hfsq+r) + dk*ln2_lo)) - f)
    const __m256d inner = _mm256_add_pd(
        _mm256_mul_pd(s, _mm256_add_pd(hfsq, r)), _mm256_mul_pd(dk, ln2_lo));
    return _mm256_sub_pd(_mm256_mul_pd(dk, ln2_hi),
                         _mm256_sub_pd(_mm256_sub_pd(hfsq, inner), f));
}

template <std::size_t N>
inline __m256d horner_num(const double (&coef)[N], __m256d r) {
    __m256d acc = _mm256_set1_pd(coef[N - 1]);
    for (std::size_t i = N - 1; i-- > 0;)
        acc = _mm256_add_pd(_mm256_mul_pd(acc, r), _mm256_set1_pd(coef[i]));
    return acc;
}

template <std::size_t N>
inline __m256d horner_den(const double (&coef)[N], __m256d r) {
    __m256d acc = _mm256_set1_pd(coef[N - 1]);
    for (std::size_t i = N - 1; i-- > 0;)
        acc = _mm256_add_pd(_mm256_mul_pd(acc, r), _mm256_set1_pd(coef[i]));
    return _mm256_add_pd(_mm256_mul_pd(acc, r), _mm256_set1_pd(1.0));
}

// detail::normal_quantile_core, lane-wise (all branches computed, blended).
inline __m256d normal_quantile_pd(__m256d p) {
    using namespace evt::detail;
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d q = _mm256_sub_pd(p, _mm256_set1_pd(0.5));
    const __m256d central =
        _mm256_cmp_pd(abs_pd(q), _mm256_set1_pd(0.425), _CMP_LE_OQ);

    const __m256d r = _mm256_sub_pd(_mm256_set1_pd(0.180625), _mm256_mul_pd(q, q));
    const __m256d zc = _mm256_div_pd(_mm256_mul_pd(q, horner_num(ppnd_a, r)),
                                     horner_den(ppnd_b, r));

    const __m256d qneg = _mm256_cmp_pd(q, _mm256_setzero_pd(), _CMP_LT_OQ);
    const __m256d rt = _mm256_blendv_pd(_mm256_sub_pd(one, p), p, qneg);
    const __m256d s = _mm256_sqrt_pd(neg_pd(log_pd(rt)));
    const __m256d near5 = _mm256_cmp_pd(s, _mm256_set1_pd(5.0), _CMP_LE_OQ);
    const __m256d t_near = _mm256_sub_pd(s, _mm256_set1_pd(1.6));
    const __m256d t_far = _mm256_sub_pd(s, _mm256_set1_pd(5.0));
    const __m256d z_near = _mm256_div_pd(horner_num(ppnd_c, t_near),
                                         horner_den(ppnd_d, t_near));
    const __m256d z_far = _mm256_div_pd(horner_num(ppnd_e, t_far),
                                        horner_den(ppnd_f, t_far));
    __m256d zt = _mm256_blendv_pd(z_far, z_near, near5);
    zt = _mm256_blendv_pd(zt, neg_pd(zt), qneg);

    return _mm256_blendv_pd(zt, zc, central);
}

template <Case C>
inline __m256d statistic_pd(__m256d x, __m256d y) {
    if constexpr (C == Case::normal) return x;
    if constexpr (C == Case::abs_normal) return abs_pd(x);
    if constexpr (C == Case::sum_normal) return _mm256_sub_pd(x, y);
    if constexpr (C == Case::sum_abs) return _mm256_add_pd(abs_pd(x), abs_pd(y));
    if constexpr (C == Case::diff_abs) return _mm256_sub_pd(abs_pd(x), abs_pd(y));
    if constexpr (C == Case::abs_diff_abs)
        return abs_pd(_mm256_sub_pd(abs_pd(x), abs_pd(y)));
}

template <Case C>
double rep_maximum_impl(std::uint64_t seed, std::uint64_t rep, std::int64_t n) {
    const double ninf = -std::numeric_limits<double>::infinity();
    __m256d acc = _mm256_set1_pd(ninf);
    const std::int64_t full = n & ~std::int64_t{3};
    for (std::int64_t i = 0; i < full; i += 4) {
        const Bits4 bits = philox4(seed, rep, static_cast<std::uint64_t>(i));
        const __m256d x = normal_quantile_pd(unit_double(bits.ux));
        const __m256d y = normal_quantile_pd(unit_double(bits.uy));
        acc = _mm256_max_pd(acc, statistic_pd<C>(x, y));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double m = ninf;
    for (double v : lanes) m = max_acc(m, v);
    for (std::int64_t i = full; i < n; ++i) {
        const auto [x, y] = philox::normal_pair(seed, rep, static_cast<std::uint64_t>(i));
        m = max_acc(m, statistic(C, x, y));
    }
    return m;
}

} // namespace

double rep_maximum_avx2(Case c, std::uint64_t seed, std::uint64_t rep,
                        std::int64_t n) {
    switch (c) {
        case Case::normal: return rep_maximum_impl<Case::normal>(seed, rep, n);
        case Case::abs_normal: return rep_maximum_impl<Case::abs_normal>(seed, rep, n);
        case Case::sum_normal: return rep_maximum_impl<Case::sum_normal>(seed, rep, n);
        case Case::sum_abs: return rep_maximum_impl<Case::sum_abs>(seed, rep, n);
        case Case::diff_abs: return rep_maximum_impl<Case::diff_abs>(seed, rep, n);
        case Case::abs_diff_abs:
            return rep_maximum_impl<Case::abs_diff_abs>(seed, rep, n);
    }
    return rep_maximum_scalar(c, seed, rep, n);
}

void philox_bits_avx2(std::uint64_t seed, std::uint64_t rep, std::uint64_t blk0,
                      std::size_t nblocks, std::uint64_t* ux, std::uint64_t* uy) {
    alignas(32) std::uint64_t bx[4];
    alignas(32) std::uint64_t by[4];
    for (std::size_t i = 0; i < nblocks; i += 4) {
        const Bits4 bits = philox4(seed, rep, blk0 + i);
        _mm256_store_si256(reinterpret_cast<__m256i*>(bx), bits.ux);
        _mm256_store_si256(reinterpret_cast<__m256i*>(by), bits.uy);
        for (std::size_t j = 0; j < 4 && i + j < nblocks; ++j) {
            ux[i + j] = bx[j];
            uy[i + j] = by[j];
        }
    }
}

void normal_quantile_avx2(const double* p, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = normal_quantile_pd(_mm256_loadu_pd(p + i));
        _mm256_storeu_pd(z + i, v);
    }
    for (; i < n; ++i) z[i] = detail::normal_quantile_core(p[i]);
}

} // namespace evt::kernels

#endif // x86_64
