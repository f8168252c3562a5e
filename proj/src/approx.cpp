#include "sentopt/approx.hpp"

#include <cmath>
#include <stdexcept>

#include "sentopt/moments.hpp"
#include "sentopt/rng.hpp"

namespace sentopt {

double lognormal_approx::nu() const { return std::sqrt(nu2); }

double lognormal_approx::window_mean() const {
    return window() * std::exp(alpha + 0.5 * nu2);
}

lognormal_approx levy_fit(const model_params& p, double maturity) {
    validate_or_throw(p);
    if (maturity <= p.tau)
        throw std::invalid_argument("levy_fit: window too short, maturity must exceed tau");
    const double u = maturity - p.tau;
    const double m1 = window_integral_mean(p, u);
    const double m2 = window_integral_second_moment(p, u);

    lognormal_approx a;
    a.maturity = maturity;
    a.tau = p.tau;
    a.head = p.conf.head_integral(-p.tau, 0.0);
    a.alpha = std::log(m1 * m1 / (u * std::sqrt(m2)));
    a.nu2 = std::max(0.0, std::log(m2 / (m1 * m1)));
    return a;
}

double pdf_x(const lognormal_approx& a, double x) {
    if (a.nu2 <= 0.0)
        throw std::domain_error("pdf_x: degenerate law (nu2 = 0) has no density");
    if (x <= a.head)
        return 0.0;
    const double y = (x - a.head) / a.window();
    const double nu = a.nu();
    const double z = (std::log(y) - a.alpha) / nu;
    static constexpr double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi / (y * nu) * std::exp(-0.5 * z * z) / a.window();
}

std::vector<double> sample_x(const lognormal_approx& a, std::size_t n, std::uint64_t seed) {
    std::vector<double> out(n);
    const double nu = a.nu();
    for (std::size_t i = 0; i < n; ++i) {
        // one normal per draw; the second of the pair is discarded
        double xi = normal_pair(seed, 0x5a3cull, i)[0];
        out[i] = a.head + a.window() * std::exp(a.alpha + nu * xi);
    }
    return out;
}

} // namespace sentopt
