#include "sentopt/mc.hpp"

#include <cmath>
#include <stdexcept>

#include "sentopt/stats.hpp"

namespace sentopt {

namespace {

mc_estimate reduce(std::span<const double> values, std::uint64_t seed) {
    sample_stats st = summarize(values);
    return {st.mean, st.se_mean, values.size(), seed};
}

} // namespace

mc_estimate mc_price(const model_params& p, const rates_curve& rates, const option_spec& spec,
                     std::size_t n_paths, std::uint64_t seed, const time_grid& grid,
                     exec_policy policy) {
    if (p.rho != 0.0)
        throw std::invalid_argument("mc_price: martingale-measure pricing requires rho = 0");
    if (n_paths < 1000)
        throw std::invalid_argument("mc_price: need at least 1e3 paths");
    if (std::abs(grid.horizon - spec.maturity) > 1e-12)
        throw std::invalid_argument("mc_price: grid horizon must equal the contract maturity");

    terminal_result term = simulate_terminal(p, rates, grid, n_paths, seed,
                                             measure_kind::minimal_martingale, false, policy);
    const double disc = rates.discount(0.0, spec.maturity);
    std::vector<double> payoffs(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i)
        payoffs[i] = disc * spec.evaluate(term.price[i]);
    return reduce(payoffs, seed);
}

double mmm_density_path(const model_params& p, const rates_curve& rates, const path_bundle& path) {
    if (path.measure != measure_kind::physical)
        throw std::invalid_argument("mmm_density_path: path must be simulated under the physical measure");
    if (p.rho != 0.0)
        throw std::invalid_argument("mmm_density_path: requires rho = 0");
    if (path.z_conf.size() != path.grid.n_steps || path.z_orth.size() != path.grid.n_steps)
        throw std::invalid_argument("mmm_density_path: path lacks stored noise increments");

    // replay the recorded noise through an engine with the density
    // accumulator switched on
    step_tables tab(p, rates, path.grid, measure_kind::physical);
    path_engine eng(tab);
    eng.enable_density();
    eng.reset(path.seed, path.path_index);
    for (std::size_t k = 0; k < path.grid.n_steps; ++k)
        eng.step_with(path.z_conf[k], path.z_orth[k]);
    return eng.density_weight();
}

std::pair<mc_estimate, mc_estimate> reweighted_price_check(const model_params& p,
                                                           const rates_curve& rates,
                                                           const option_spec& spec,
                                                           std::size_t n_paths,
                                                           std::uint64_t seed,
                                                           const time_grid& grid,
                                                           exec_policy policy) {
    if (p.rho != 0.0)
        throw std::invalid_argument("reweighted_price_check: requires rho = 0");

    terminal_result phys = simulate_terminal(p, rates, grid, n_paths, seed,
                                             measure_kind::physical, true, policy);
    const double disc = rates.discount(0.0, grid.horizon);
    std::vector<double> weighted(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i)
        weighted[i] = phys.density[i] * disc * spec.evaluate(phys.price[i]);

    mc_estimate reweighted = reduce(weighted, seed);
    mc_estimate direct = mc_price(p, rates, spec, n_paths, seed, grid, policy);
    return {reweighted, direct};
}

} // namespace sentopt
