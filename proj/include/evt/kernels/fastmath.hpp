#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

// Scalar reference kernels for the draw pipeline. Every operation here is a
// plain IEEE double add/sub/mul/div/sqrt or exact integer/bit manipulation,
// in a fixed order, so the AVX2 translation in kernels_avx2.cpp can
// reproduce the results bit for bit. Do not "simplify" expressions or
// introduce std::fma here; the equivalence tests will catch it.

namespace evt::detail {

// log(x) for finite normal positive x, fdlibm-style argument reduction with
// an odd polynomial in f/(2+f). Worst-case error about 1 ulp, which is far
// below the accuracy of the AS241 rational approximation that consumes it.
inline double portable_log(double x) {
    constexpr double ln2_hi = 6.93147180369123816490e-01;
    constexpr double ln2_lo = 1.90821492927058770002e-10;
    constexpr double Lg1 = 6.666666666666735130e-01;
    constexpr double Lg2 = 3.999999999940941908e-01;
    constexpr double Lg3 = 2.857142874366239149e-01;
    constexpr double Lg4 = 2.222219843214978396e-01;
    constexpr double Lg5 = 1.818357216161805012e-01;
    constexpr double Lg6 = 1.531383769920937332e-01;
    constexpr double Lg7 = 1.479819860511658591e-01;

    const std::uint64_t ix = std::bit_cast<std::uint64_t>(x);
    // Reduce x = 2^k * m with m in [sqrt(2)/2, sqrt(2)).
    const std::uint64_t tmp = ix - 0x3fe6a09e667f3bcdULL;
    const int k = static_cast<int>(static_cast<std::int32_t>(tmp >> 32) >> 20);
    const std::uint64_t im = (tmp & 0x000fffffffffffffULL) + 0x3fe6a09e667f3bcdULL;
    const double m = std::bit_cast<double>(im);

    const double f = m - 1.0;
    const double s = f / (2.0 + f);
    const double z = s * s;
    const double w = z * z;
    const double t1 = w * (Lg2 + w * (Lg4 + w * Lg6));
    const double t2 = z * (Lg1 + w * (Lg3 + w * (Lg5 + w * Lg7)));
    const double r = t2 + t1;
    const double hfsq = 0.5 * f * f;
    const double dk = static_cast<double>(k);
    return dk * ln2_hi - ((hfsq - (s * (hfsq + r) + dk * ln2_lo)) - f);
}

// AS241 (Wichura, PPND16) coefficients.
inline constexpr double ppnd_a[8] = {
    3.3871328727963666080e+0, 1.3314166789178437745e+2, 1.9715909503065514427e+3,
    1.3731693765509461125e+4, 4.5921953931549871457e+4, 6.7265770927008700853e+4,
    3.3430575583588128105e+4, 2.5090809287301226727e+3};
inline constexpr double ppnd_b[7] = {
    4.2313330701600911252e+1, 6.8718700749205790830e+2, 5.3941960214247511077e+3,
    2.1213794301586595867e+4, 3.9307895800092710610e+4, 2.8729085735721942674e+4,
    5.2264952788528545610e+3};
inline constexpr double ppnd_c[8] = {
    1.42343711074968357734e+0, 4.63033784615654529590e+0, 5.76949722146069140550e+0,
    3.64784832476320460504e+0, 1.27045825245236838258e+0, 2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4};
inline constexpr double ppnd_d[7] = {
    2.05319162663775882187e+0, 1.67638483018380384940e+0, 6.89767334985100004550e-1,
    1.48103976427480074590e-1, 1.51986665636164571966e-2, 5.47593808499534494600e-4,
    1.05075007164441684324e-9};
inline constexpr double ppnd_e[8] = {
    6.65790464350110377720e+0, 5.46378491116411436990e+0, 1.78482653991729133580e+0,
    2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
inline constexpr double ppnd_f[7] = {
    5.99832206555887937690e-1, 1.36929880922735805310e-1, 1.48753612908506148525e-2,
    7.86869131145613259100e-4, 1.84631831751005468180e-5, 1.42151175831644588870e-7,
    2.04426310338993978564e-15};

inline double ppnd_num(const double (&p)[8], double r) {
    return ((((((p[7] * r + p[6]) * r + p[5]) * r + p[4]) * r + p[3]) * r + p[2]) * r +
            p[1]) * r + p[0];
}
inline double ppnd_den(const double (&q)[7], double r) {
    return ((((((q[6] * r + q[5]) * r + q[4]) * r + q[3]) * r + q[2]) * r + q[1]) * r +
            q[0]) * r + 1.0;
}

// Inverse normal CDF for p in (0,1). Callers guarantee the open interval;
// the uniform-bit transform in philox.hpp can produce neither 0 nor 1.
inline double normal_quantile_core(double p) {
    const double q = p - 0.5;
    if (q < 0 ? -q <= 0.425 : q <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * ppnd_num(ppnd_a, r) / ppnd_den(ppnd_b, r);
    }
    const double rt = q < 0 ? p : 1.0 - p;
    const double s = std::sqrt(-portable_log(rt));
    double z;
    if (s <= 5.0) {
        const double t = s - 1.6;
        z = ppnd_num(ppnd_c, t) / ppnd_den(ppnd_d, t);
    } else {
        const double t = s - 5.0;
        z = ppnd_num(ppnd_e, t) / ppnd_den(ppnd_f, t);
    }
    return q < 0 ? -z : z;
}

// 64 random bits -> double in (0, 1): the top 52 bits select the midpoint
// (2m+1) * 2^-53 of a dyadic subinterval. Exactly representable, never 0 or 1.
inline double u64_to_unit_double(std::uint64_t u) {
    const double m = static_cast<double>(u >> 12);
    return m * 0x1.0p-52 + 0x1.0p-53;
}

} // namespace evt::detail
