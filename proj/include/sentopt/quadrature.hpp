#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace sentopt {

enum class quad_rule { adaptive_simpson, gauss_legendre };

struct quadrature_settings {
    quad_rule rule = quad_rule::adaptive_simpson;
    int n_nodes = 128;          // gauss_legendre
    double rel_tol = 1e-8;      // adaptive_simpson
    double z_max = 8.5;         // standard-normal domain half-width for the mixing integral
    bool include_head = false;  // add the deterministic history integral to the
                                // mixing density's argument
    int inner_panels = 32;      // pre-split panels for the generic-payoff inner integral
};

void check_settings(const quadrature_settings& q);

struct quad_result {
    double value = 0.0;
    double error_estimate = 0.0;
    long evals = 0;
};

// Nodes and weights on [-1, 1].
const std::vector<std::pair<double, double>>& gauss_legendre_nodes(int n);

quad_result integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                     int n);

// Recursive Simpson with Richardson error control. `initial_panels` guards
// against features invisible to the first coarse estimate. Throws
// quadrature_not_converged when the evaluation budget is exhausted.
quad_result integrate_adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                       double rel_tol, double abs_tol = 0.0,
                                       int initial_panels = 8, long max_evals = 4'000'000);

} // namespace sentopt
