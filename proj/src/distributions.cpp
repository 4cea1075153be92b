#include "evt/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "evt/numerics.hpp"

namespace evt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInvSqrt2Pi = 0.3989422804014326779;   // 1/sqrt(2 pi)
constexpr double kInvSqrtPi = 0.5641895835477562869;    // 1/sqrt(pi)
constexpr double kSqrt2OverPi = 0.7978845608028653559;  // sqrt(2/pi)
constexpr double kInvSqrt2 = 0.7071067811865475244;     // 1/sqrt(2)
constexpr double kLn2 = 0.6931471805599453094;

} // namespace

double DistributionModel::density(double x) const {
    switch (label) {
        case Case::normal:
            return kInvSqrt2Pi * std::exp(-0.5 * x * x);
        case Case::abs_normal:
            return x < 0.0 ? 0.0 : kSqrt2OverPi * std::exp(-0.5 * x * x);
        case Case::sum_normal:  // N(0, 2)
            return 0.5 * kInvSqrtPi * std::exp(-0.25 * x * x);
        case Case::sum_abs:
            // Convolution of two half-normal densities over u in [0, x].
            return x < 0.0 ? 0.0
                           : 2.0 * kInvSqrtPi * std::exp(-0.25 * x * x) * evt::erf(0.5 * x);
        case Case::diff_abs:
            return kInvSqrtPi * std::exp(-0.25 * x * x) * evt::erfc(0.5 * std::fabs(x));
        case Case::abs_diff_abs:
            return x < 0.0
                       ? 0.0
                       : 2.0 * kInvSqrtPi * std::exp(-0.25 * x * x) * evt::erfc(0.5 * x);
    }
    return 0.0;
}

double DistributionModel::tail(double x) const {
    switch (label) {
        case Case::normal:
            return 0.5 * evt::erfc(x * kInvSqrt2);
        case Case::abs_normal:
            return x < 0.0 ? 1.0 : evt::erfc(x * kInvSqrt2);
        case Case::sum_normal:
            return 0.5 * evt::erfc(0.5 * x);
        case Case::sum_abs: {
            // 1 - erf(x/2)^2 without cancellation.
            if (x < 0.0) return 1.0;
            const double e = evt::erfc(0.5 * x);
            return e * (2.0 - e);
        }
        case Case::diff_abs: {
            if (x >= 0.0) {
                const double e = evt::erfc(0.5 * x);
                return 0.5 * e * e;
            }
            const double e = evt::erfc(-0.5 * x);
            return 1.0 - 0.5 * e * e;
        }
        case Case::abs_diff_abs: {
            if (x < 0.0) return 1.0;
            const double e = evt::erfc(0.5 * x);
            return e * e;
        }
    }
    return 0.0;
}

double DistributionModel::log_tail(double x) const {
    switch (label) {
        case Case::normal:
            return evt::log_erfc(x * kInvSqrt2) - kLn2;
        case Case::abs_normal:
            return x < 0.0 ? 0.0 : evt::log_erfc(x * kInvSqrt2);
        case Case::sum_normal:
            return evt::log_erfc(0.5 * x) - kLn2;
        case Case::sum_abs: {
            if (x < 0.0) return 0.0;
            return evt::log_erfc(0.5 * x) + std::log(2.0 - evt::erfc(0.5 * x));
        }
        case Case::diff_abs:
            if (x >= 0.0) return 2.0 * evt::log_erfc(0.5 * x) - kLn2;
            return std::log1p(-0.5 * evt::erfc(-0.5 * x) * evt::erfc(-0.5 * x));
        case Case::abs_diff_abs:
            return x < 0.0 ? 0.0 : 2.0 * evt::log_erfc(0.5 * x);
    }
    return 0.0;
}

TailAsymptote DistributionModel::asymptote() const {
    switch (label) {
        case Case::normal: return {kInvSqrt2Pi, 1.0, 0.5};
        case Case::abs_normal: return {kSqrt2OverPi, 1.0, 0.5};
        case Case::sum_normal: return {kInvSqrtPi, 1.0, 0.25};
        case Case::sum_abs: return {4.0 * kInvSqrtPi, 1.0, 0.25};
        case Case::diff_abs: return {2.0 / M_PI, 2.0, 0.5};
        case Case::abs_diff_abs: return {4.0 / M_PI, 2.0, 0.5};
    }
    return {1.0, 0.0, 0.5};
}

DistributionModel model(Case c) {
    const bool one_sided =
        c == Case::abs_normal || c == Case::sum_abs || c == Case::abs_diff_abs;
    return DistributionModel{c, one_sided ? 0.0 : -kInf};
}

double density(Case c, double x) { return model(c).density(x); }
double cdf(Case c, double x) { return model(c).cdf(x); }
double tail(Case c, double x) { return model(c).tail(x); }
double log_tail(Case c, double x) { return model(c).log_tail(x); }
TailAsymptote asymptote(Case c) { return model(c).asymptote(); }

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double gumbel_pdf(double x) {
    const double e = std::exp(-x);
    return e * std::exp(-e);
}

double gumbel_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("gumbel_quantile: p must lie in (0, 1)");
    return -std::log(-std::log(p));
}

} // namespace evt
