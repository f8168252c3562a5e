#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sentopt/model.hpp"
#include "sentopt/quadrature.hpp"

namespace sentopt {

// Built-in pricing grids: vanilla-call and cash-or-nothing surfaces over
// strike x confidence-level and strike x (maturity, delay).
struct table_cell {
    double p0 = 0.0;
    double maturity = 0.0;
    double tau = 0.0;
    double strike = 0.0;
    double quad_price = 0.0;
    double mc_price = 0.0;
    double mc_se = 0.0;
};

struct table_result {
    int which = 0;
    option_kind kind = option_kind::vanilla_call;
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<table_cell> cells;  // row-major

    const table_cell& at(std::size_t row, std::size_t col) const {
        return cells[row * n_cols + col];
    }
};

// Model parameters shared by all built-in tables (constant confidence level).
model_params table_model(double p0, double tau);

table_result run_table(int which, std::size_t mc_paths = 20000, std::uint64_t seed = 42,
                       double dt = 1.0 / 252.0, const quadrature_settings& q = {});

void write_table_csv(std::ostream& os, const table_result& t);

} // namespace sentopt
