#pragma once

#include <cstdint>
#include <utility>

#include "sentopt/model.hpp"
#include "sentopt/simulate.hpp"

namespace sentopt {

struct mc_estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
};

// Risk-neutral Monte Carlo price under the martingale measure (rho must be
// zero). Deterministic in (seed, grid, n_paths).
mc_estimate mc_price(const model_params& p, const rates_curve& rates, const option_spec& spec,
                     std::size_t n_paths, std::uint64_t seed, const time_grid& grid,
                     exec_policy policy = exec_policy::parallel);

// Terminal Radon-Nikodym weight L_T of the martingale measure along a stored
// physical-measure path, rebuilt from the recorded noise.
double mmm_density_path(const model_params& p, const rates_curve& rates, const path_bundle& path);

// Change-of-measure consistency: (A) physical-measure estimate of
// L_T * discounted payoff, (B) direct martingale-measure estimate. Both use
// the same seed, so the comparison is common-random-numbers tight.
std::pair<mc_estimate, mc_estimate> reweighted_price_check(const model_params& p,
                                                           const rates_curve& rates,
                                                           const option_spec& spec,
                                                           std::size_t n_paths,
                                                           std::uint64_t seed,
                                                           const time_grid& grid,
                                                           exec_policy policy = exec_policy::parallel);

} // namespace sentopt
