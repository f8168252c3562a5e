#include "sentopt/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace sentopt {

namespace {

void check_denominators(const model_params& p) {
    const double mu = p.conf.mu_p;
    const double s2 = p.conf.sigma_p * p.conf.sigma_p;
    if (mu == 0.0 || mu + s2 == 0.0 || 2.0 * mu + s2 == 0.0)
        throw std::domain_error("degenerate denominator: mu_P, mu_P + sigma_P^2 and "
                                "2 mu_P + sigma_P^2 must all be nonzero");
}

} // namespace

double window_integral_mean(const model_params& p, double u) {
    const double mu = p.conf.mu_p;
    if (mu == 0.0)
        throw std::domain_error("degenerate denominator: mu_P must be nonzero");
    return p.conf.phi0() / mu * std::expm1(mu * u);
}

double window_integral_second_moment(const model_params& p, double u) {
    check_denominators(p);
    const double mu = p.conf.mu_p;
    const double s2 = p.conf.sigma_p * p.conf.sigma_p;
    const double phi0 = p.conf.phi0();
    const double a = 2.0 * phi0 * phi0 / ((mu + s2) * (2.0 * mu + s2)) *
                     std::expm1((2.0 * mu + s2) * u);
    const double b = 2.0 * phi0 * phi0 / (mu * (mu + s2)) * std::expm1(mu * u);
    return a - b;
}

double mean_x(const model_params& p, double t) {
    if (t < 0.0)
        throw std::invalid_argument("mean_x: t must be nonnegative");
    if (t <= p.tau)
        return p.conf.head_integral(-p.tau, t - p.tau);
    return p.conf.head_integral(-p.tau, 0.0) + window_integral_mean(p, t - p.tau);
}

double var_x(const model_params& p, double t) {
    if (t < 0.0)
        throw std::invalid_argument("var_x: t must be nonnegative");
    if (t <= p.tau)
        return 0.0;
    const double m1 = window_integral_mean(p, t - p.tau);
    return window_integral_second_moment(p, t - p.tau) - m1 * m1;
}

double cross_moment_p(const model_params& p, double u, double v) {
    if (u < 0.0 || v < 0.0)
        throw std::invalid_argument("cross_moment_p: times must be nonnegative");
    if (u > v)
        std::swap(u, v);
    const double mu = p.conf.mu_p;
    const double s2 = p.conf.sigma_p * p.conf.sigma_p;
    const double phi0 = p.conf.phi0();
    return phi0 * phi0 * std::exp(mu * (v - u)) * std::exp((2.0 * mu + s2) * u);
}

moment_pair moments_log_price(const model_params& p, double t) {
    const double drift = p.mu_s - 0.5 * p.sigma_s * p.sigma_s;
    const double mx = mean_x(p, t);
    moment_pair out;
    out.mean = std::log(p.s0) + drift * mx;
    out.variance = drift * drift * var_x(p, t) + p.sigma_s * p.sigma_s * mx;
    return out;
}

} // namespace sentopt
