#include <limits>

#include "evt/kernels/backend.hpp"
#include "evt/kernels/philox.hpp"
#include "evt/kernels/statistic.hpp"

namespace evt::kernels {

double rep_maximum_scalar(Case c, std::uint64_t seed, std::uint64_t rep,
                          std::int64_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < n; ++i) {
        const auto [x, y] = philox::normal_pair(seed, rep, static_cast<std::uint64_t>(i));
        m = max_acc(m, statistic(c, x, y));
    }
    return m;
}

} // namespace evt::kernels
