#include "evt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>

#include "evt/kernels/fastmath.hpp"

namespace evt {

void AccuracyBudget::validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0) || !(abs_tol > 0.0 || rel_tol > 0.0))
        throw std::invalid_argument("AccuracyBudget: need abs_tol > 0 or rel_tol > 0");
    if (max_refinements < 1)
        throw std::invalid_argument("AccuracyBudget: max_refinements must be >= 1");
}

budget_exceeded::budget_exceeded(double best, double err)
    : std::runtime_error("quadrature budget exceeded; best estimate " +
                         std::to_string(best) + " +/- " + std::to_string(err)),
      best_estimate(best), error_estimate(err) {}

double QuadratureResult::checked() const {
    if (!converged) throw budget_exceeded(value, error);
    return value;
}

// ---------------------------------------------------------------------------
// Error functions: Cody's rational approximations (SPECFUN CALERF regimes).

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;  // 1/sqrt(pi)

constexpr double cody_a[5] = {3.16112374387056560e+0, 1.13864154151050156e+2,
                              3.77485237685302021e+2, 3.20937758913846947e+3,
                              1.85777706184603153e-1};
constexpr double cody_b[4] = {2.36012909523441209e+1, 2.44024637934444173e+2,
                              1.28261652607737228e+3, 2.84423683343917062e+3};
constexpr double cody_c[9] = {5.64188496988670089e-1, 8.88314979438837594e+0,
                              6.61191906371416295e+1, 2.98635138197400131e+2,
                              8.81952221241769090e+2, 1.71204761263407058e+3,
                              2.05107837782607147e+3, 1.23033935479799725e+3,
                              2.15311535474403846e-8};
constexpr double cody_d[8] = {1.57449261107098347e+1, 1.17693950891312499e+2,
                              5.37181101862009858e+2, 1.62138957456669019e+3,
                              3.29079923573345963e+3, 4.36261909014324716e+3,
                              3.43936767414372164e+3, 1.23033935480374942e+3};
constexpr double cody_p[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                              1.25781726111229246e-1, 1.60837851487422766e-2,
                              6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr double cody_q[5] = {2.56852019228982242e+0, 1.87295284992346047e+0,
                              5.27905102951428412e-1, 6.05183413124413191e-2,
                              2.33520497626869185e-3};

// erf(y) for 0 <= y <= 0.46875.
double erf_small(double y) {
    const double ysq = y > 5.93e-9 ? y * y : 0.0;
    double xnum = cody_a[4] * ysq;
    double xden = ysq;
    for (int i = 0; i < 3; ++i) {
        xnum = (xnum + cody_a[i]) * ysq;
        xden = (xden + cody_b[i]) * ysq;
    }
    return y * (xnum + cody_a[3]) / (xden + cody_b[3]);
}

// erfcx(y) for y > 0.46875 (rational pieces for (0.46875, 4] and (4, inf)).
double erfcx_large(double y) {
    if (y <= 4.0) {
        double xnum = cody_c[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + cody_c[i]) * y;
            xden = (xden + cody_d[i]) * y;
        }
        return (xnum + cody_c[7]) / (xden + cody_d[7]);
    }
    const double ysq = 1.0 / (y * y);
    double xnum = cody_p[5] * ysq;
    double xden = ysq;
    for (int i = 0; i < 4; ++i) {
        xnum = (xnum + cody_p[i]) * ysq;
        xden = (xden + cody_q[i]) * ysq;
    }
    double r = ysq * (xnum + cody_p[4]) / (xden + cody_q[4]);
    return (kInvSqrtPi - r) / y;
}

// exp(-y^2) with the argument split so the squaring does not lose bits.
double exp_neg_square(double y) {
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del);
}

} // namespace

double erfc(double x) {
    const double y = std::fabs(x);
    double result;
    if (y <= 0.46875) {
        result = 1.0 - erf_small(y);
    } else {
        // No early cutoff: exp underflows gradually near y ~ 27.2.
        result = exp_neg_square(y) * erfcx_large(y);
    }
    return x < 0.0 ? 2.0 - result : result;
}

double erf(double x) {
    const double y = std::fabs(x);
    double result;
    if (y <= 0.46875) {
        result = erf_small(y);
    } else {
        result = (0.5 - exp_neg_square(y) * erfcx_large(y)) + 0.5;
    }
    return x < 0.0 ? -result : result;
}

double erfcx(double x) {
    if (x >= 0.0) {
        if (x <= 0.46875) return std::exp(x * x) * (1.0 - erf_small(x));
        return erfcx_large(x);
    }
    // erfcx(-x) = 2 exp(x^2) - erfcx(x); overflows to +inf below x ~ -26.6.
    return 2.0 * std::exp(x * x) - erfcx(-x);
}

double log_erfc(double x) {
    if (x <= 0.46875) return std::log(erfc(x));
    return std::log(erfcx_large(x)) - x * x;
}

double normal_cdf(double x) {
    // Phi(x) = (1 + erf(x/sqrt(2)))/2 = erfc(-x/sqrt(2))/2; the erfc form
    // keeps the far left tail (x ~ -38) at full relative accuracy.
    return 0.5 * erfc(-x * 0.7071067811865475244);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    return detail::normal_quantile_core(p);
}

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod (G7, K15).

namespace {

// Nodes/weights on [0, 1]: column 0 abscissa, column 1 Gauss-7 weight,
// column 2 Kronrod-15 weight. Even-indexed rows are the Gauss points.
constexpr double gk_nodes[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978554},
    {0.207784955007898468, 0.0,                  0.204432940075298892},
    {0.586087235467691130, 0.0,                  0.169004726639267903},
    {0.864864423359769073, 0.0,                  0.104790010322250184},
    {0.991455371120812639, 0.0,                  0.022935322010529225},
};

struct Panel {
    double lo, hi;
    double value;
    double error;
};

template <class F>
Panel evaluate_panel(const F& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double f0 = f(mid);
    double g7 = gk_nodes[0][1] * f0;
    double k15 = gk_nodes[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk_nodes[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += gk_nodes[i][1] * fi;
        k15 += gk_nodes[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    // Standard QUADPACK-style error sharpening of |K15 - G7|.
    double err = std::fabs(k15 - g7);
    err = 200.0 * err * std::sqrt(200.0 * err > 1.0 ? 1.0 : 200.0 * err);
    return Panel{lo, hi, k15, err};
}

QuadratureResult integrate_finite(const std::function<double(double)>& f, double lo,
                                  double hi, const AccuracyBudget& budget) {
    if (lo == hi) return {0.0, 0.0, true, 0};

    auto worse = [](const Panel& a, const Panel& b) { return a.error < b.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> panels(worse);
    panels.push(evaluate_panel(f, lo, hi));
    double value = panels.top().value;
    double error = panels.top().error;

    int refinements = 0;
    while (refinements < budget.max_refinements) {
        if (error <= std::max(budget.abs_tol, budget.rel_tol * std::fabs(value)))
            return {value, error, true, refinements};
        Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Interval no longer splittable at double precision.
            panels.push(worst);
            break;
        }
        Panel left = evaluate_panel(f, worst.lo, mid);
        Panel right = evaluate_panel(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++refinements;
    }
    const bool ok = error <= std::max(budget.abs_tol, budget.rel_tol * std::fabs(value));
    return {value, error, ok, refinements};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const AccuracyBudget& budget) {
    budget.validate();
    if (std::isinf(hi)) {
        // t = lo + u/(1-u) maps [0,1) onto [lo, inf); dt = du/(1-u)^2.
        auto g = [&f, lo](double u) {
            const double w = 1.0 - u;
            const double t = lo + u / w;
            const double v = f(t);
            return v == 0.0 ? 0.0 : v / (w * w);
        };
        return integrate_finite(g, 0.0, 1.0, budget);
    }
    return integrate_finite(f, lo, hi, budget);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("find_root: tol must be > 0");
    if (!(lo < hi)) throw std::invalid_argument("find_root: need lo < hi");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw no_bracket("find_root: f(lo) and f(hi) have the same sign");

    const int max_iter =
        std::clamp(static_cast<int>(std::ceil(std::log2((hi - lo) / tol))) + 2, 1, 200);
    for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace evt
