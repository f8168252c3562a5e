#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace sentopt {

// Deterministic confidence history on [-L, 0]: either a constant level or a
// piecewise-linear curve through sampled points.
class initial_curve {
public:
    static initial_curve constant(double level) {
        initial_curve c;
        c.constant_ = true;
        c.level_ = level;
        return c;
    }
    // points: (time in [-L,0], value), strictly increasing times.
    static initial_curve sampled(std::vector<std::pair<double, double>> points);

    bool is_constant() const { return constant_; }
    double constant_level() const { return level_; }
    double value_at(double t) const;                 // t must lie inside the sampled span
    double integral(double a, double b) const;       // exact for constant / piecewise-linear
    double min_value() const;

private:
    bool constant_ = true;
    double level_ = 0.0;
    std::vector<std::pair<double, double>> pts_;
};

struct confidence_params {
    double mu_p = 0.0;        // drift, per year
    double sigma_p = 0.0;     // volatility, per sqrt(year)
    double hist_len = 0.0;    // L: length of the known history window, years
    initial_curve phi = initial_curve::constant(0.0);

    double phi0() const;                          // phi(0)
    double phi_at(double t) const;                // t in [-hist_len, 0]
    double head_integral(double a, double b) const; // int_a^b phi, [a,b] in [-hist_len, 0]
};

struct model_params {
    confidence_params conf;
    double mu_s = 0.0;     // price drift multiplier, per unit confidence-year
    double sigma_s = 0.0;  // price volatility multiplier
    double tau = 0.0;      // information delay, years
    double rho = 0.0;      // corr(price noise, confidence noise), in [0,1]
    double s0 = 0.0;       // spot
};

// Piecewise-constant deterministic short rate. Segments are (end_time, rate)
// with strictly increasing end times; the curve covers [0, last end_time].
class rates_curve {
public:
    rates_curve() = default;
    explicit rates_curve(std::vector<std::pair<double, double>> segments);
    static rates_curve constant(double r);

    double rate_at(double t) const;
    double integral(double t0, double t1) const;  // int_{t0}^{t1} r(u) du, exact
    double discount(double t0, double t1) const;  // exp(-integral)
    double horizon() const;

    const std::vector<std::pair<double, double>>& segments() const { return segs_; }

private:
    std::vector<std::pair<double, double>> segs_;
};

enum class option_kind { vanilla_call, vanilla_put, cash_or_nothing_call, generic };

struct option_spec {
    option_kind kind = option_kind::vanilla_call;
    double strike = 0.0;
    double maturity = 0.0;  // T, must exceed the delay tau
    double payout = 0.0;    // cash amount A, cash_or_nothing_call only
    std::function<double(double)> payoff;  // generic only: s_T -> payoff

    // Terminal payoff for any kind; used by the Monte Carlo pricers.
    double evaluate(double s_terminal) const;
};

const char* option_kind_name(option_kind k);

enum class validation_error {
    non_positive_phi,
    delay_exceeds_history,
    non_positive_sigma_s,
    zero_drift,
    rho_out_of_range,
    non_positive_history,
    negative_sigma_p,
    non_positive_spot,
    non_positive_delay,
    window_too_short,
};

struct validation_issue {
    validation_error code;
    std::string what;
};

// Returns every violated invariant (empty == valid). Pure, hence idempotent.
std::vector<validation_issue> validate(const model_params& p);

// Throws std::invalid_argument listing all issues; returns p unchanged if valid.
const model_params& validate_or_throw(const model_params& p);

std::vector<validation_issue> validate_contract(const option_spec& spec, const model_params& p);

} // namespace sentopt
