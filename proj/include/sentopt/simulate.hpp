#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sentopt/grid.hpp"
#include "sentopt/model.hpp"
#include "sentopt/path_engine.hpp"

namespace sentopt {

enum class exec_policy { serial, parallel };

// One simulated path on a grid, with the raw normal draws kept so that
// measure-change diagnostics can replay the noise.
struct path_bundle {
    time_grid grid;
    measure_kind measure = measure_kind::physical;
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
    std::vector<double> p;        // confidence, per grid point
    std::vector<double> s;        // price, per grid point
    std::vector<double> x;        // integrated delayed confidence, per grid point
    std::vector<double> z_conf;   // per-step confidence draw
    std::vector<double> z_orth;   // per-step orthogonal price draw
};

// Exact-in-distribution path generation. Throws std::invalid_argument if the
// grid step exceeds the delay or if the martingale measure is requested with
// rho != 0.
std::vector<path_bundle> simulate_paths(const model_params& p, const rates_curve& rates,
                                        const time_grid& grid, std::size_t n_paths,
                                        std::uint64_t seed, measure_kind measure,
                                        exec_policy policy = exec_policy::parallel);

// Streaming kernel: terminal values only, constant memory per worker.
// Results are bit-identical across worker counts (per-path substreams,
// serial reduction by the caller).
struct terminal_result {
    std::vector<double> price;       // S_T
    std::vector<double> log_price;   // log S_T
    std::vector<double> x;           // X_T
    std::vector<double> density;     // L_T, only when requested
};

terminal_result simulate_terminal(const model_params& p, const rates_curve& rates,
                                  const time_grid& grid, std::size_t n_paths,
                                  std::uint64_t seed, measure_kind measure,
                                  bool want_density = false,
                                  exec_policy policy = exec_policy::parallel);

// Streaming kernel recording (X_t, log S_t, discounted S_t) at chosen grid
// indices for every path.
struct checkpoint_result {
    std::vector<std::size_t> indices;
    std::vector<double> times;
    // outer: checkpoint, inner: path
    std::vector<std::vector<double>> x;
    std::vector<std::vector<double>> log_price;
    std::vector<std::vector<double>> discounted_price;
};

checkpoint_result simulate_checkpoints(const model_params& p, const rates_curve& rates,
                                       const time_grid& grid,
                                       std::span<const std::size_t> indices,
                                       std::size_t n_paths, std::uint64_t seed,
                                       measure_kind measure,
                                       exec_policy policy = exec_policy::parallel);

// X_t for a given simulated confidence path: closed-form history part plus a
// trapezoid over the stored P samples. Throws std::out_of_range beyond the
// grid horizon.
double integrated_info(const model_params& p, const time_grid& grid,
                       std::span<const double> conf_path, double t);

// Gaussian kernel density estimate. bandwidth <= 0 selects Silverman's rule.
struct density_curve {
    std::vector<double> x;
    std::vector<double> f;
};

density_curve kde_density(std::span<const double> samples, double bandwidth = 0.0,
                          std::size_t n_points = 401);

} // namespace sentopt
