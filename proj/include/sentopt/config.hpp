#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentopt/model.hpp"
#include "sentopt/quadrature.hpp"

namespace sentopt {

// Flat key=value run configuration. '#' starts a comment; unknown keys are
// rejected with the offending line number. Durations accept 'd' (1/252),
// 'w' (5/252) and 'm' (21/252) suffixes or plain year values.
struct run_config {
    model_params model;
    double rate = 0.0;
    option_spec contract;
    std::vector<double> rho_list;  // simulate: one price path per value
    std::size_t n_paths = 10000;
    std::uint64_t seed = 42;
    double dt = 0.0;               // grid step; 0 selects the default rule
    bool density = false;          // simulate: emit terminal-price KDE
    std::size_t rows = 25;         // moments: number of report times
    bool mc_columns = true;        // moments: append MC estimates
    quadrature_settings quad;

    rates_curve rates() const { return rates_curve::constant(rate); }
    double grid_dt() const;
};

double parse_duration(const std::string& text);  // "5d", "1w", "3m" or years

run_config parse_config_text(const std::string& text);
run_config load_config(const std::string& path);

} // namespace sentopt
