#include "evt/mda.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "evt/distributions.hpp"
#include "evt/sequences.hpp"

namespace evt {

CriterionReport von_mises_ratio(Case c, double t, double x) {
    if (!(t > 0.0)) throw std::domain_error("von_mises_ratio: t must be > 0");
    const DistributionModel m = model(c);
    const double shifted = t + x * m.asymptote().aux(t);
    if (shifted <= m.support_lo)
        throw std::domain_error("von_mises_ratio: t + x f(t) leaves the support");
    const double ratio = std::exp(m.log_tail(shifted) - m.log_tail(t));
    const double target = std::exp(-x);
    return CriterionReport{t, x, ratio, target, std::fabs(ratio - target)};
}

double gumbel_limit_error(Case c, std::uint64_t n, double x) {
    const NormSeq seq = sequences(c, n);
    const double nf = static_cast<double>(n);
    return std::fabs(nf * tail(c, seq.a * x + seq.b) - std::exp(-x));
}

double mills_ratio(double c, double x, const AccuracyBudget& budget) {
    if (!(c > 0.0) || !(x > 0.0))
        throw std::domain_error("mills_ratio: c and x must be > 0");
    const double integral =
        integrate([c](double t) { return std::exp(-c * t * t); }, x,
                  std::numeric_limits<double>::infinity(), budget)
            .checked();
    const double first_order = std::exp(-c * x * x) / (2.0 * c * x);
    return integral / first_order;
}

double exact_max_sup_distance(Case c, std::uint64_t n, std::span<const double> grid) {
    if (grid.empty())
        throw std::invalid_argument("exact_max_sup_distance: grid must be non-empty");
    const NormSeq seq = sequences(c, n);
    const double nf = static_cast<double>(n);
    double sup = 0.0;
    for (double x : grid) {
        const double t = tail(c, seq.a * x + seq.b);
        // F^n = exp(n log F), log F floored at -745 (the exp underflow edge).
        double logF = t >= 1.0 ? -745.0 : std::log1p(-t);
        if (logF < -745.0) logF = -745.0;
        const double Fn = std::exp(nf * logF);
        const double d = std::fabs(Fn - gumbel_cdf(x));
        if (d > sup) sup = d;
    }
    return sup;
}

std::vector<double> default_sup_grid() {
    std::vector<double> grid;
    grid.reserve(1101);
    for (int i = -300; i <= 800; ++i) grid.push_back(i / 100.0);
    return grid;
}

} // namespace evt
