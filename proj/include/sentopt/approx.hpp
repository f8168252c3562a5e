#pragma once

#include <cstdint>
#include <vector>

#include "sentopt/model.hpp"

namespace sentopt {

// Moment-matched log-normal law for the time average of the confidence
// integral over the stochastic window (T - tau), plus the deterministic
// history contribution `head` so the full integrated-confidence law can be
// represented as head + window * LogNormal(alpha, nu2).
struct lognormal_approx {
    double alpha = 0.0;
    double nu2 = 0.0;
    double maturity = 0.0;
    double tau = 0.0;
    double head = 0.0;  // int_{-tau}^0 phi

    double window() const { return maturity - tau; }
    double nu() const;
    // Atom of the degenerate (nu2 == 0) law, without / with the head.
    double window_mean() const;
};

// Fits (alpha, nu2) so the first two moments of the log-normal match the
// closed-form moments of the averaged window integral. Throws
// std::domain_error on degenerate denominators, std::invalid_argument when
// T <= tau.
lognormal_approx levy_fit(const model_params& p, double maturity);

// Density of the full integrated confidence (head + window average); zero at
// or below the head.
double pdf_x(const lognormal_approx& a, double x);

// i.i.d. draws of head + window * exp(alpha + nu * xi). Deterministic in seed.
std::vector<double> sample_x(const lognormal_approx& a, std::size_t n, std::uint64_t seed);

} // namespace sentopt
