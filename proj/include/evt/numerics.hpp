#pragma once

#include <functional>
#include <stdexcept>

namespace evt {

// Tolerance budget for adaptive quadrature. At least one tolerance must be
// strictly positive and max_refinements >= 1; validate() enforces this.
struct AccuracyBudget {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_refinements = 2000;

    void validate() const;
};

struct budget_exceeded : std::runtime_error {
    double best_estimate;
    double error_estimate;
    budget_exceeded(double best, double err);
};

struct no_bracket : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Error function family, Cody-style rational approximations.
// erf: absolute error <= ~1.5e-16 everywhere; erfc: relative error below
// 1e-13 on [0, 26] and evaluated down to the underflow floor (~x = 27.2)
// rather than being cut to zero early; erfcx(x) = exp(x^2) erfc(x).
double erf(double x);
double erfc(double x);
double erfcx(double x);

// log(erfc(x)) without underflow; usable far beyond x = 27.
double log_erfc(double x);

// Standard normal CDF, 0.5 * erfc(-x / sqrt(2)). Accurate in both tails.
double normal_cdf(double x);

// Inverse standard normal CDF (Wichura's AS241 rational approximation).
// Requires p in (0, 1). This is the exact code path used by the Monte
// Carlo draw kernels; see kernels/fastmath.hpp.
double normal_quantile(double p);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;      // estimated absolute error
    bool converged = false;
    int refinements = 0;

    // Value if converged, otherwise throws budget_exceeded.
    double checked() const;
};

// Adaptive Gauss-Kronrod (G7,K15) quadrature of f over [lo, hi].
// hi may be +infinity: the range is mapped through t = lo + u/(1-u),
// u in [0,1), and the transformed panel is subdivided like any other,
// so the tail contributes its own error estimate instead of being cut.
// Never throws on budget exhaustion; inspect `converged` or use checked().
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const AccuracyBudget& budget = {});

// Bisection on a bracketing interval. f must be continuous with
// f(lo), f(hi) of opposite sign (or zero at an endpoint); monotonicity
// makes the result the unique root. Deterministic: fixed iteration count
// derived from tol. Throws no_bracket if the sign condition fails.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

} // namespace evt
