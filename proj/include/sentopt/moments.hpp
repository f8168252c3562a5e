#pragma once

#include "sentopt/model.hpp"

namespace sentopt {

struct moment_pair {
    double mean = 0.0;
    double variance = 0.0;
};

// E[X_t]: deterministic history integral for t <= tau, exponential closed
// form beyond it. Continuous and strictly increasing in t.
double mean_x(const model_params& p, double t);

// Var[X_t]: 0 for t <= tau. Throws std::domain_error when mu_P + sigma_P^2
// or 2 mu_P + sigma_P^2 vanishes.
double var_x(const model_params& p, double t);

// E[P_u P_v] for the confidence factor (symmetric in u, v).
double cross_moment_p(const model_params& p, double u, double v);

// Mean and variance of log S_t.
moment_pair moments_log_price(const model_params& p, double t);

// First two moments of the stochastic-window integral int_0^u P_s ds
// (no history contribution). Building blocks for the density fit.
double window_integral_mean(const model_params& p, double u);
double window_integral_second_moment(const model_params& p, double u);

} // namespace sentopt
