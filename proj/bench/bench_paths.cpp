// Throughput comparison of the serial reference path kernel against the
// OpenMP one, plus a bitwise agreement check between the two.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "sentopt/grid.hpp"
#include "sentopt/simulate.hpp"
#include "sentopt/tables.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sentopt;
using clk = std::chrono::steady_clock;

int main(int argc, char** argv) {
    std::size_t n_paths = 200000;
    double dt = 1.0 / 2520.0;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--paths"))
            n_paths = std::stoull(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--dt"))
            dt = std::stod(argv[i + 1]);
    }

    model_params m = table_model(100.0, 5.0 / 252.0);
    rates_curve rates = rates_curve::constant(0.01);
    time_grid grid = time_grid::uniform(63.0 / 252.0, dt);
    const double steps = double(n_paths) * double(grid.n_steps);

    std::printf("paths %zu, steps/path %zu\n", n_paths, grid.n_steps);

    auto t0 = clk::now();
    terminal_result serial = simulate_terminal(m, rates, grid, n_paths, 7,
                                               measure_kind::minimal_martingale, false,
                                               exec_policy::serial);
    auto t1 = clk::now();
    terminal_result parallel = simulate_terminal(m, rates, grid, n_paths, 7,
                                                 measure_kind::minimal_martingale, false,
                                                 exec_policy::parallel);
    auto t2 = clk::now();

    double ds = std::chrono::duration<double>(t1 - t0).count();
    double dp = std::chrono::duration<double>(t2 - t1).count();

    bool identical = true;
    for (std::size_t i = 0; i < n_paths; ++i)
        if (serial.price[i] != parallel.price[i] || serial.x[i] != parallel.x[i]) {
            identical = false;
            break;
        }

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::printf("serial   : %8.3f s   %.2fM steps/s\n", ds, steps / ds / 1e6);
    std::printf("parallel : %8.3f s   %.2fM steps/s   (%d threads, speedup %.2fx)\n", dp,
                steps / dp / 1e6, threads, ds / dp);
    std::printf("bitwise identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
