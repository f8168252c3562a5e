#pragma once

#include <stdexcept>
#include <string>

namespace sentopt {

// Numerical failures map to CLI exit code 3; configuration problems to 2.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct quadrature_not_converged : numeric_error {
    using numeric_error::numeric_error;
};

struct too_few_samples : numeric_error {
    using numeric_error::numeric_error;
};

struct degenerate_sample : numeric_error {
    using numeric_error::numeric_error;
};

struct payoff_not_integrable : numeric_error {
    using numeric_error::numeric_error;
};

struct config_error : std::runtime_error {
    config_error(int line_no, const std::string& msg)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

} // namespace sentopt
