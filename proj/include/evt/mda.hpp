#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evt/cases.hpp"
#include "evt/numerics.hpp"

namespace evt {

struct CriterionReport {
    double t;
    double x;
    double ratio;
    double target;     // e^(-x)
    double abs_error;  // |ratio - target|
};

// Von Mises-type ratio  F̄(t + x f(t)) / F̄(t)  with the auxiliary function
// f(t) = 1/(2 c t) taken from the case asymptote. Evaluated in log space,
// so t = 50 (tail masses ~ 1e-540) is routine. Throws std::domain_error if
// the shifted point leaves the support of a one-sided law.
CriterionReport von_mises_ratio(Case c, double t, double x);

// |n * F̄(a_n x + b_n) - e^(-x)| with the closed-form sequences.
double gumbel_limit_error(Case c, std::uint64_t n, double x);

// integrate(e^(-c t^2), [x, inf)) divided by its first-order asymptote
// (1/(2c)) x^(-1) e^(-c x^2). Converges to 1 from below. Propagates
// budget_exceeded if the quadrature cannot meet the budget.
double mills_ratio(double c, double x, const AccuracyBudget& budget = {});

// sup over the grid of |F(a_n x + b_n)^n - Λ(x)|, the exact Gumbel distance
// of the finite-n maximum. F^n is exp(n log F) with log F floored at -745.
double exact_max_sup_distance(Case c, std::uint64_t n, std::span<const double> grid);

// x in [-3, 8], step 0.01; Λ mass outside is below 2e-9.
std::vector<double> default_sup_grid();

} // namespace evt
