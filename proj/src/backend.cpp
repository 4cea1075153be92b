#include "evt/kernels/backend.hpp"

#include <stdexcept>

namespace evt::kernels {

bool avx2_supported() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend resolve(Backend requested) {
    switch (requested) {
        case Backend::automatic:
            return avx2_supported() ? Backend::avx2 : Backend::scalar;
        case Backend::scalar:
            return Backend::scalar;
        case Backend::avx2:
            if (!avx2_supported())
                throw std::runtime_error("AVX2 backend requested but not available");
            return Backend::avx2;
    }
    return Backend::scalar;
}

std::string_view name(Backend resolved) {
    switch (resolved) {
        case Backend::automatic: return "auto";
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

double rep_maximum(Case c, std::uint64_t seed, std::uint64_t rep, std::int64_t n,
                   Backend backend) {
#if defined(__x86_64__) || defined(_M_X64)
    if (resolve(backend) == Backend::avx2) return rep_maximum_avx2(c, seed, rep, n);
#else
    (void)resolve(backend);
#endif
    return rep_maximum_scalar(c, seed, rep, n);
}

} // namespace evt::kernels
