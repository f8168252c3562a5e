#include "sentopt/tables.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "sentopt/grid.hpp"
#include "sentopt/pricing.hpp"
#include "sentopt/simulate.hpp"
#include "sentopt/stats.hpp"

namespace sentopt {

namespace {

constexpr double day = 1.0 / 252.0;
constexpr double week = 5.0 / 252.0;
constexpr double month = 21.0 / 252.0;
const double strikes[] = {400.0, 425.0, 450.0, 475.0, 500.0};

struct row_def {
    double p0;
    double maturity;
    double tau;
};

} // namespace

model_params table_model(double p0, double tau) {
    model_params m;
    m.conf.mu_p = 0.03;
    m.conf.sigma_p = 0.35;
    m.conf.hist_len = 2.0 * tau;
    m.conf.phi = initial_curve::constant(p0);
    m.mu_s = 1e-5;
    m.sigma_s = 0.04;
    m.tau = tau;
    m.rho = 0.0;
    m.s0 = 450.0;
    return m;
}

table_result run_table(int which, std::size_t mc_paths, std::uint64_t seed, double dt,
                       const quadrature_settings& q) {
    std::vector<row_def> rows;
    option_kind kind;
    switch (which) {
    case 1:
    case 3:
        kind = which == 1 ? option_kind::vanilla_call : option_kind::cash_or_nothing_call;
        rows = {{10.0, 3 * month, week}, {100.0, 3 * month, week}, {1000.0, 3 * month, week}};
        break;
    case 2:
    case 4:
        kind = which == 2 ? option_kind::vanilla_call : option_kind::cash_or_nothing_call;
        rows = {{100.0, 1 * month, week},
                {100.0, 1 * month, 2 * week},
                {100.0, 3 * month, week},
                {100.0, 3 * month, 2 * week}};
        break;
    default:
        throw std::invalid_argument("run_table: table selector must be 1, 2, 3 or 4");
    }

    const rates_curve rates = rates_curve::constant(0.01);
    table_result out;
    out.which = which;
    out.kind = kind;
    out.n_rows = rows.size();
    out.n_cols = std::size(strikes);

    for (const row_def& row : rows) {
        model_params m = table_model(row.p0, row.tau);
        time_grid grid = time_grid::uniform(row.maturity, dt);
        terminal_result term;
        if (mc_paths > 0)
            term = simulate_terminal(m, rates, grid, mc_paths, seed,
                                     measure_kind::minimal_martingale);
        const double disc = rates.discount(0.0, row.maturity);

        for (double k : strikes) {
            option_spec spec;
            spec.kind = kind;
            spec.strike = k;
            spec.maturity = row.maturity;
            spec.payout = 100.0;

            table_cell cell;
            cell.p0 = row.p0;
            cell.maturity = row.maturity;
            cell.tau = row.tau;
            cell.strike = k;
            cell.quad_price = price_quadrature(m, rates, spec, q).price;
            if (mc_paths > 0) {
                std::vector<double> pay(mc_paths);
                for (std::size_t i = 0; i < mc_paths; ++i)
                    pay[i] = disc * spec.evaluate(term.price[i]);
                sample_stats st = summarize(pay);
                cell.mc_price = st.mean;
                cell.mc_se = st.se_mean;
            }
            out.cells.push_back(cell);
        }
    }
    return out;
}

namespace {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_table_csv(std::ostream& os, const table_result& t) {
    os << "table,kind,P0,T,tau,K,price_quad,price_mc,se_mc,abs_diff\n";
    for (const table_cell& c : t.cells) {
        os << t.which << ',' << option_kind_name(t.kind) << ',' << fmt6(c.p0) << ','
           << fmt6(c.maturity) << ',' << fmt6(c.tau) << ',' << fmt6(c.strike) << ','
           << fmt6(c.quad_price) << ',' << fmt6(c.mc_price) << ',' << fmt6(c.mc_se) << ','
           << fmt6(std::abs(c.quad_price - c.mc_price)) << '\n';
    }
}

} // namespace sentopt
