#pragma once

#include <optional>

#include "sentopt/approx.hpp"
#include "sentopt/model.hpp"
#include "sentopt/quadrature.hpp"

namespace sentopt {

// Black-Scholes kernel in accumulated-variance form. `rate_int` is the rate
// integral over the option's remaining life; x is the variance argument
// (integrated confidence), so the effective volatility over a life of length
// ttm is sigma_s * sqrt(x / ttm).
double d1(double s, double strike, double x, double rate_int, double sigma_s);
double d2(double s, double strike, double x, double rate_int, double sigma_s);
double bs_price(double s, double strike, double x, double rate_int, double sigma_s);

struct price_result {
    double price = 0.0;
    std::optional<double> q1;  // spot-numeraire exercise weight (calls only)
    std::optional<double> q2;  // risk-neutral exercise weight
    double error_estimate = 0.0;
};

// Quadrature pricing of the t = 0 contracts against the fitted mixing
// density. The decomposition price = s0*q1 - K*discount*q2 holds exactly by
// construction for vanilla calls.
price_result price_call_quadrature(const model_params& p, const rates_curve& rates,
                                   const option_spec& spec, const quadrature_settings& q = {});

price_result price_binary_quadrature(const model_params& p, const rates_curve& rates,
                                     const option_spec& spec, const quadrature_settings& q = {});

// European put via call parity under the discounted-martingale property.
price_result price_put(const model_params& p, const rates_curve& rates, const option_spec& spec,
                       const quadrature_settings& q = {});

// Generic European payoff: inner conditional-log-normal expectation by
// adaptive quadrature on the standard-normal variable, outer mixture over the
// fitted density.
double price_generic_quadrature(const model_params& p, const rates_curve& rates,
                                const option_spec& spec, const quadrature_settings& q = {});

// Dispatch on spec.kind.
price_result price_quadrature(const model_params& p, const rates_curve& rates,
                              const option_spec& spec, const quadrature_settings& q = {});

} // namespace sentopt
