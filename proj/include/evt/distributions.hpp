#pragma once

#include <cmath>

#include "evt/cases.hpp"

namespace evt {

// Leading tail form  F̄(x) ~ C * x^(-p) * exp(-c * x^2)  as x -> +inf.
// The auxiliary function of the von Mises criterion follows from it.
struct TailAsymptote {
    double C;
    double p;
    double c;

    double value(double x) const { return C * std::pow(x, -p) * std::exp(-c * x * x); }
    double aux(double t) const { return 1.0 / (2.0 * c * t); }
};

// Closed forms for one of the six case laws. `tail` is the primitive,
// evaluated through erfc so it never cancels; cdf(x) is literally
// 1 - tail(x), which makes cdf + tail = 1 an exact identity.
struct DistributionModel {
    Case label;
    double support_lo;  // 0 for the one-sided laws, -inf otherwise

    double density(double x) const;
    double tail(double x) const;
    double cdf(double x) const { return 1.0 - tail(x); }
    // log of the tail, stable arbitrarily deep (x = 50 is routine).
    double log_tail(double x) const;
    TailAsymptote asymptote() const;
};

DistributionModel model(Case c);

// Convenience forms used throughout the verifiers and the CLI.
double density(Case c, double x);
double cdf(Case c, double x);
double tail(Case c, double x);
double log_tail(Case c, double x);
TailAsymptote asymptote(Case c);

// Standard Gumbel law  Λ(x) = exp(-e^(-x)).
double gumbel_cdf(double x);
double gumbel_pdf(double x);
double gumbel_quantile(double p);  // -log(-log p); throws std::domain_error outside (0,1)

} // namespace evt
