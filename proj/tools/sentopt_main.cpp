#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentopt/config.hpp"
#include "sentopt/errors.hpp"
#include "sentopt/grid.hpp"
#include "sentopt/mc.hpp"
#include "sentopt/moments.hpp"
#include "sentopt/pricing.hpp"
#include "sentopt/simulate.hpp"
#include "sentopt/stats.hpp"
#include "sentopt/tables.hpp"

namespace fs = std::filesystem;
using namespace sentopt;

namespace {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream f(dir / name, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + (dir / name).string());
    return f;
}

int cmd_price(const std::string& cfg_path, const fs::path& out_dir) {
    run_config cfg = load_config(cfg_path);
    validate_or_throw(cfg.model);
    price_result r = price_quadrature(cfg.model, cfg.rates(), cfg.contract, cfg.quad);

    auto f = open_out(out_dir, "price.csv");
    f << "kind,K,T,tau,P0,price,q1,q2,err_estimate\n";
    f << option_kind_name(cfg.contract.kind) << ',' << fmt6(cfg.contract.strike) << ','
      << fmt6(cfg.contract.maturity) << ',' << fmt6(cfg.model.tau) << ','
      << fmt6(cfg.model.conf.phi0()) << ',' << fmt6(r.price) << ','
      << (r.q1 ? fmt6(*r.q1) : "") << ',' << (r.q2 ? fmt6(*r.q2) : "") << ','
      << fmt6(r.error_estimate) << '\n';
    std::cout << option_kind_name(cfg.contract.kind) << " K=" << fmt6(cfg.contract.strike)
              << " price " << fmt6(r.price) << "  (" << (out_dir / "price.csv").string() << ")\n";
    return 0;
}

int cmd_table(int which, std::size_t n_paths, std::uint64_t seed, double dt,
              const fs::path& out_dir) {
    table_result t = run_table(which, n_paths, seed, dt);
    auto f = open_out(out_dir, "table" + std::to_string(which) + ".csv");
    write_table_csv(f, t);
    write_table_csv(std::cout, t);
    return 0;
}

int cmd_simulate(const std::string& cfg_path, const fs::path& out_dir) {
    run_config cfg = load_config(cfg_path);
    validate_or_throw(cfg.model);
    const double horizon = cfg.contract.maturity;
    time_grid grid = time_grid::uniform(horizon, cfg.grid_dt());
    const bool single = cfg.rho_list.size() == 1;

    auto suffix = [&](double rho) {
        return single ? std::string{} : "_rho" + fmt6(rho);
    };

    std::vector<std::pair<double, std::vector<double>>> terminals;
    for (double rho : cfg.rho_list) {
        model_params m = cfg.model;
        m.rho = rho;
        auto bundles = simulate_paths(m, cfg.rates(), grid, cfg.n_paths, cfg.seed,
                                      measure_kind::physical);
        auto f = open_out(out_dir, "paths" + suffix(rho) + ".csv");
        f << "path_id,t,P,S,X\n";
        std::vector<double> term;
        term.reserve(bundles.size());
        for (const path_bundle& b : bundles) {
            for (std::size_t i = 0; i < grid.n_points(); ++i)
                f << b.path_index << ',' << fmt6(grid.time_at(i)) << ',' << fmt6(b.p[i]) << ','
                  << fmt6(b.s[i]) << ',' << fmt6(b.x[i]) << '\n';
            term.push_back(b.s.back());
        }
        terminals.emplace_back(rho, std::move(term));
        std::cout << "wrote " << (out_dir / ("paths" + suffix(rho) + ".csv")).string() << "\n";
    }

    if (cfg.density) {
        for (const auto& [rho, term] : terminals) {
            density_curve c = kde_density(term);
            auto fd = open_out(out_dir, "density" + suffix(rho) + ".csv");
            fd << "x,f\n";
            for (std::size_t i = 0; i < c.x.size(); ++i)
                fd << fmt6(c.x[i]) << ',' << fmt6(c.f[i]) << '\n';
            std::cout << "wrote " << (out_dir / ("density" + suffix(rho) + ".csv")).string()
                      << "\n";
        }
    }
    return 0;
}

int cmd_moments(const std::string& cfg_path, const fs::path& out_dir) {
    run_config cfg = load_config(cfg_path);
    validate_or_throw(cfg.model);
    const double horizon = cfg.contract.maturity;
    const std::size_t rows = std::max<std::size_t>(cfg.rows, 2);

    // choose the grid so every report time is a grid point
    auto mult = std::size_t(std::ceil(horizon / (double(rows) * cfg.grid_dt()) - 1e-9));
    mult = std::max<std::size_t>(mult, 1);
    time_grid grid;
    grid.horizon = horizon;
    grid.n_steps = rows * mult;

    std::vector<std::size_t> marks(rows + 1);
    for (std::size_t k = 0; k <= rows; ++k)
        marks[k] = k * mult;

    checkpoint_result mc;
    if (cfg.mc_columns)
        mc = simulate_checkpoints(cfg.model, cfg.rates(), grid, marks, cfg.n_paths, cfg.seed,
                                  measure_kind::physical);

    auto f = open_out(out_dir, "moments.csv");
    f << "t,mean_X,var_X,mean_logS,var_logS";
    if (cfg.mc_columns)
        f << ",mc_mean_X,mc_mean_X_se,mc_var_X,mc_var_X_se,mc_mean_logS,mc_mean_logS_se,"
             "mc_var_logS,mc_var_logS_se";
    f << '\n';
    for (std::size_t k = 0; k <= rows; ++k) {
        double t = grid.time_at(marks[k]);
        moment_pair lp = moments_log_price(cfg.model, t);
        f << fmt6(t) << ',' << fmt6(mean_x(cfg.model, t)) << ',' << fmt6(var_x(cfg.model, t))
          << ',' << fmt6(lp.mean) << ',' << fmt6(lp.variance);
        if (cfg.mc_columns) {
            sample_stats sx = summarize(mc.x[k]);
            sample_stats sl = summarize(mc.log_price[k]);
            f << ',' << fmt6(sx.mean) << ',' << fmt6(sx.se_mean) << ',' << fmt6(sx.variance)
              << ',' << fmt6(sx.se_variance) << ',' << fmt6(sl.mean) << ',' << fmt6(sl.se_mean)
              << ',' << fmt6(sl.variance) << ',' << fmt6(sl.se_variance);
        }
        f << '\n';
    }
    std::cout << "wrote " << (out_dir / "moments.csv").string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sentopt: confidence-driven asset price simulation and option pricing"};
    app.require_subcommand(1);
    std::string out_dir = "./out";
    app.add_option("--out", out_dir, "output directory (default ./out)");

    std::string cfg_path;
    int which = 1;
    std::size_t n_paths = 20000;
    std::uint64_t seed = 42;
    std::string dt_text = "1d";

    auto* price = app.add_subcommand("price", "price one contract from a config file");
    price->add_option("config", cfg_path, "config file")->required();

    auto* table = app.add_subcommand("table", "reproduce a built-in pricing grid (1-4)");
    table->add_option("which", which, "table number")->required();
    table->add_option("--n-paths", n_paths, "Monte Carlo paths per row (default 20000)");
    table->add_option("--seed", seed, "Monte Carlo seed (default 42)");
    table->add_option("--dt", dt_text, "Monte Carlo grid step (default 1d)");

    auto* simulate = app.add_subcommand("simulate", "simulate paths from a config file");
    simulate->add_option("config", cfg_path, "config file")->required();

    auto* moments = app.add_subcommand("moments", "tabulate analytic moments vs time");
    moments->add_option("config", cfg_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (price->parsed())
            return cmd_price(cfg_path, out_dir);
        if (table->parsed())
            return cmd_table(which, n_paths, seed, parse_duration(dt_text), out_dir);
        if (simulate->parsed())
            return cmd_simulate(cfg_path, out_dir);
        if (moments->parsed())
            return cmd_moments(cfg_path, out_dir);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
