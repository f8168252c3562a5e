#include "sentopt/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sentopt/errors.hpp"
#include "sentopt/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sentopt {

step_tables::step_tables(const model_params& p, const rates_curve& rates, const time_grid& grid,
                         measure_kind measure)
    : grid_(grid), measure_(measure), dt_(grid.dt()) {
    validate_or_throw(p);
    if (dt_ > p.tau * (1.0 + 1e-12))
        throw std::invalid_argument("grid too coarse: step must not exceed the delay tau");
    if (measure == measure_kind::minimal_martingale && p.rho != 0.0)
        throw std::invalid_argument("minimal martingale measure requires rho = 0");
    if (grid.horizon > rates.horizon() + 1e-12)
        throw std::out_of_range("rates curve does not cover the grid horizon");

    const std::size_t n = grid.n_points();
    const double lag = p.tau / dt_;

    first_stochastic_ = n;
    hist_val_.assign(n, 0.0);
    lag_idx_.assign(n, 0);
    lag_w_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double shifted = double(i) - lag;
        if (shifted <= 1e-9) {
            double td = std::max(grid.time_at(i) - p.tau, -p.conf.hist_len);
            hist_val_[i] = p.conf.phi_at(std::min(td, 0.0));
            continue;
        }
        if (first_stochastic_ == n)
            first_stochastic_ = i;
        auto j = std::size_t(shifted + 1e-9);
        double w = shifted - double(j);
        if (w < 1e-9)
            w = 0.0;
        else if (w > 1.0 - 1e-9) {
            ++j;
            w = 0.0;
        }
        lag_idx_[i] = j;
        lag_w_[i] = w;
    }
    ring_cap_ = std::size_t(std::ceil(lag)) + 2;

    rate_.assign(n, 0.0);
    cum_rate_.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        rate_[i] = rates.rate_at(grid.time_at(i));
        cum_rate_[i] = rates.integral(0.0, grid.time_at(i));
    }

    log_drift_mult_ = measure == measure_kind::minimal_martingale
                          ? -0.5 * p.sigma_s * p.sigma_s
                          : p.mu_s - 0.5 * p.sigma_s * p.sigma_s;
    p_log_drift_ = (p.conf.mu_p - 0.5 * p.conf.sigma_p * p.conf.sigma_p) * dt_;
    p_vol_step_ = p.conf.sigma_p * std::sqrt(dt_);
    rho_ = p.rho;
    rho_orth_ = std::sqrt(std::max(0.0, 1.0 - p.rho * p.rho));
    p0_ = p.conf.phi0();
    s0_ = p.s0;
    sigma_s_ = p.sigma_s;
    mu_s_ = p.mu_s;
}

namespace {

template <class PerPath>
void run_paths(std::size_t n_paths, const step_tables& tab, exec_policy policy,
               bool want_density, PerPath&& body) {
#ifdef _OPENMP
    if (policy == exec_policy::parallel) {
#pragma omp parallel
        {
            path_engine eng(tab);
            if (want_density)
                eng.enable_density();
#pragma omp for schedule(static)
            for (long long i = 0; i < (long long)n_paths; ++i)
                body(eng, std::size_t(i));
        }
        return;
    }
#else
    (void)policy;
#endif
    path_engine eng(tab);
    if (want_density)
        eng.enable_density();
    for (std::size_t i = 0; i < n_paths; ++i)
        body(eng, i);
}

} // namespace

std::vector<path_bundle> simulate_paths(const model_params& p, const rates_curve& rates,
                                        const time_grid& grid, std::size_t n_paths,
                                        std::uint64_t seed, measure_kind measure,
                                        exec_policy policy) {
    step_tables tab(p, rates, grid, measure);
    const std::size_t npts = grid.n_points();

    std::vector<path_bundle> out(n_paths);
    run_paths(n_paths, tab, policy, false, [&](path_engine& eng, std::size_t i) {
        path_bundle& b = out[i];
        b.grid = grid;
        b.measure = measure;
        b.seed = seed;
        b.path_index = i;
        b.p.resize(npts);
        b.s.resize(npts);
        b.x.resize(npts);
        b.z_conf.resize(grid.n_steps);
        b.z_orth.resize(grid.n_steps);
        eng.reset(seed, i);
        b.p[0] = eng.confidence();
        b.s[0] = eng.price();
        b.x[0] = 0.0;
        for (std::size_t k = 0; k < grid.n_steps; ++k) {
            eng.step();
            b.p[k + 1] = eng.confidence();
            b.s[k + 1] = eng.price();
            b.x[k + 1] = eng.integrated_info();
            b.z_conf[k] = eng.last_z_conf();
            b.z_orth[k] = eng.last_z_orth();
        }
    });
    return out;
}

terminal_result simulate_terminal(const model_params& p, const rates_curve& rates,
                                  const time_grid& grid, std::size_t n_paths,
                                  std::uint64_t seed, measure_kind measure, bool want_density,
                                  exec_policy policy) {
    step_tables tab(p, rates, grid, measure);
    terminal_result r;
    r.price.resize(n_paths);
    r.log_price.resize(n_paths);
    r.x.resize(n_paths);
    if (want_density)
        r.density.resize(n_paths);

    run_paths(n_paths, tab, policy, want_density, [&](path_engine& eng, std::size_t i) {
        eng.reset(seed, i);
        for (std::size_t k = 0; k < grid.n_steps; ++k)
            eng.step();
        r.log_price[i] = eng.log_price();
        r.price[i] = std::exp(r.log_price[i]);
        r.x[i] = eng.integrated_info();
        if (want_density)
            r.density[i] = eng.density_weight();
    });
    return r;
}

checkpoint_result simulate_checkpoints(const model_params& p, const rates_curve& rates,
                                       const time_grid& grid,
                                       std::span<const std::size_t> indices,
                                       std::size_t n_paths, std::uint64_t seed,
                                       measure_kind measure, exec_policy policy) {
    step_tables tab(p, rates, grid, measure);
    for (std::size_t idx : indices)
        if (idx > grid.n_steps)
            throw std::out_of_range("checkpoint index beyond grid");

    checkpoint_result r;
    r.indices.assign(indices.begin(), indices.end());
    std::sort(r.indices.begin(), r.indices.end());
    r.times.reserve(r.indices.size());
    for (std::size_t idx : r.indices)
        r.times.push_back(grid.time_at(idx));
    const std::size_t nc = r.indices.size();
    r.x.assign(nc, std::vector<double>(n_paths, 0.0));
    r.log_price.assign(nc, std::vector<double>(n_paths, 0.0));
    r.discounted_price.assign(nc, std::vector<double>(n_paths, 0.0));

    run_paths(n_paths, tab, policy, false, [&](path_engine& eng, std::size_t i) {
        eng.reset(seed, i);
        std::size_t next = 0;
        auto record = [&](std::size_t c) {
            r.x[c][i] = eng.integrated_info();
            r.log_price[c][i] = eng.log_price();
            r.discounted_price[c][i] = eng.discounted_price();
        };
        while (next < nc && r.indices[next] == 0)
            record(next++);
        for (std::size_t k = 0; k < grid.n_steps; ++k) {
            eng.step();
            while (next < nc && r.indices[next] == k + 1)
                record(next++);
        }
    });
    return r;
}

double integrated_info(const model_params& p, const time_grid& grid,
                       std::span<const double> conf_path, double t) {
    if (t < 0.0 || t > grid.horizon * (1.0 + 1e-12))
        throw std::out_of_range("integrated_info: time beyond grid horizon");
    if (conf_path.size() != grid.n_points())
        throw std::invalid_argument("integrated_info: path length does not match grid");
    if (t <= p.tau)
        return p.conf.head_integral(-p.tau, t - p.tau);

    double total = p.conf.head_integral(-p.tau, 0.0);
    // trapezoid of P over [0, t - tau], interpolating the partial last step
    const double end = t - p.tau;
    const double dt = grid.dt();
    const auto full = std::size_t(end / dt * (1.0 + 1e-14));
    const std::size_t nfull = std::min(full, grid.n_steps);
    for (std::size_t k = 0; k < nfull; ++k)
        total += 0.5 * dt * (conf_path[k] + conf_path[k + 1]);
    double rem = end - double(nfull) * dt;
    if (rem > 1e-14) {
        double w = rem / dt;
        double p_end = conf_path[nfull] + w * (conf_path[nfull + 1] - conf_path[nfull]);
        total += 0.5 * rem * (conf_path[nfull] + p_end);
    }
    return total;
}

density_curve kde_density(std::span<const double> samples, double bandwidth,
                          std::size_t n_points) {
    if (samples.size() < 2)
        throw too_few_samples("kde_density: need at least two samples");
    double h = bandwidth;
    if (h <= 0.0) {
        sample_stats st = summarize(samples);
        if (st.std_dev <= 0.0)
            throw degenerate_sample("kde_density: zero-variance sample, cannot pick a bandwidth");
        h = 1.06 * st.std_dev * std::pow(double(samples.size()), -0.2);
    }
    auto [mn_it, mx_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *mn_it - 4.0 * h;
    const double hi = *mx_it + 4.0 * h;

    density_curve c;
    c.x.resize(n_points);
    c.f.resize(n_points);
    const double inv_nh = 1.0 / (double(samples.size()) * h);
    for (std::size_t i = 0; i < n_points; ++i) {
        double xi = lo + (hi - lo) * double(i) / double(n_points - 1);
        kahan_sum acc;
        for (double s : samples)
            acc.add(norm_pdf((xi - s) / h));
        c.x[i] = xi;
        c.f[i] = acc.value() * inv_nh;
    }
    return c;
}

} // namespace sentopt
