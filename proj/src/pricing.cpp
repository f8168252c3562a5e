#include "sentopt/pricing.hpp"

#include <cmath>
#include <stdexcept>

#include "sentopt/errors.hpp"
#include "sentopt/stats.hpp"

namespace sentopt {

double d1(double s, double strike, double x, double rate_int, double sigma_s) {
    if (s <= 0.0 || strike <= 0.0 || x <= 0.0)
        throw std::domain_error("d1: spot, strike and variance argument must be positive");
    const double sd = sigma_s * std::sqrt(x);
    return (std::log(s / strike) + rate_int + 0.5 * sigma_s * sigma_s * x) / sd;
}

double d2(double s, double strike, double x, double rate_int, double sigma_s) {
    return d1(s, strike, x, rate_int, sigma_s) - sigma_s * std::sqrt(x);
}

double bs_price(double s, double strike, double x, double rate_int, double sigma_s) {
    const double v1 = d1(s, strike, x, rate_int, sigma_s);
    return s * norm_cdf(v1) - strike * std::exp(-rate_int) * norm_cdf(v1 - sigma_s * std::sqrt(x));
}

namespace {

struct mixture {
    lognormal_approx fit;
    double x_shift;  // head when include_head, else 0

    double x_at(double z) const {
        return x_shift + fit.window() * std::exp(fit.alpha + fit.nu() * z);
    }
    double x_atom() const { return x_shift + fit.window_mean(); }
    bool degenerate() const { return fit.nu2 <= 0.0; }
};

mixture make_mixture(const model_params& p, const option_spec& spec,
                     const quadrature_settings& q) {
    validate_or_throw(p);
    if (p.rho != 0.0)
        throw std::invalid_argument("quadrature pricing requires rho = 0");
    auto issues = validate_contract(spec, p);
    if (!issues.empty())
        throw std::invalid_argument(issues.front().what);
    check_settings(q);
    mixture m;
    m.fit = levy_fit(p, spec.maturity);
    m.x_shift = q.include_head ? m.fit.head : 0.0;
    return m;
}

// E[g(x)] under the mixing law, integrating against the standard-normal
// weight of the log-normal's driver.
quad_result mix_expectation(const mixture& m, const quadrature_settings& q,
                            const std::function<double(double)>& g) {
    if (m.degenerate())
        return {g(m.x_atom()), 0.0, 1};
    auto integrand = [&](double z) { return g(m.x_at(z)) * norm_pdf(z); };
    if (q.rule == quad_rule::gauss_legendre)
        return integrate_gauss_legendre(integrand, -q.z_max, q.z_max, q.n_nodes);
    return integrate_adaptive_simpson(integrand, -q.z_max, q.z_max, q.rel_tol);
}

} // namespace

price_result price_call_quadrature(const model_params& p, const rates_curve& rates,
                                   const option_spec& spec, const quadrature_settings& q) {
    if (spec.kind != option_kind::vanilla_call)
        throw std::invalid_argument("price_call_quadrature: contract is not a vanilla call");
    const mixture m = make_mixture(p, spec, q);
    const double rate_int = rates.integral(0.0, spec.maturity);
    const double disc = std::exp(-rate_int);

    auto r1 = mix_expectation(m, q, [&](double x) {
        return norm_cdf(d1(p.s0, spec.strike, x, rate_int, p.sigma_s));
    });
    auto r2 = mix_expectation(m, q, [&](double x) {
        return norm_cdf(d2(p.s0, spec.strike, x, rate_int, p.sigma_s));
    });

    price_result out;
    out.q1 = r1.value;
    out.q2 = r2.value;
    out.price = p.s0 * r1.value - spec.strike * disc * r2.value;
    out.error_estimate = p.s0 * r1.error_estimate + spec.strike * disc * r2.error_estimate;
    return out;
}

price_result price_binary_quadrature(const model_params& p, const rates_curve& rates,
                                     const option_spec& spec, const quadrature_settings& q) {
    if (spec.kind != option_kind::cash_or_nothing_call)
        throw std::invalid_argument("price_binary_quadrature: contract is not cash-or-nothing");
    const mixture m = make_mixture(p, spec, q);
    const double rate_int = rates.integral(0.0, spec.maturity);
    const double disc = std::exp(-rate_int);

    auto r2 = mix_expectation(m, q, [&](double x) {
        return norm_cdf(d2(p.s0, spec.strike, x, rate_int, p.sigma_s));
    });

    price_result out;
    out.q2 = r2.value;
    out.price = spec.payout * disc * r2.value;
    out.error_estimate = spec.payout * disc * r2.error_estimate;
    return out;
}

price_result price_put(const model_params& p, const rates_curve& rates, const option_spec& spec,
                       const quadrature_settings& q) {
    if (spec.kind != option_kind::vanilla_put)
        throw std::invalid_argument("price_put: contract is not a vanilla put");
    option_spec call = spec;
    call.kind = option_kind::vanilla_call;
    price_result c = price_call_quadrature(p, rates, call, q);
    price_result out;
    out.price = c.price - p.s0 + spec.strike * rates.discount(0.0, spec.maturity);
    out.error_estimate = c.error_estimate;
    return out;
}

double price_generic_quadrature(const model_params& p, const rates_curve& rates,
                                const option_spec& spec, const quadrature_settings& q) {
    if (!spec.payoff && spec.kind == option_kind::generic)
        throw std::invalid_argument("price_generic_quadrature: missing payoff function");
    const mixture m = make_mixture(p, spec, q);
    const double rate_int = rates.integral(0.0, spec.maturity);
    const double disc = std::exp(-rate_int);
    auto payoff = [&](double s_T) { return spec.evaluate(s_T); };

    // inner: discounted payoff expectation over the conditional log-normal of
    // S_T given x; adaptive so kinks and jumps in the payoff are resolved
    const double inner_half = 10.0;
    auto inner = [&](double x) {
        const double vol = p.sigma_s * std::sqrt(x);
        auto f = [&](double xi) {
            const double s_T = p.s0 * std::exp(rate_int - 0.5 * vol * vol + vol * xi);
            const double value = payoff(s_T);
            if (!std::isfinite(value))
                throw payoff_not_integrable(
                    "price_generic_quadrature: payoff diverges inside the integration domain");
            return value * norm_pdf(xi);
        };
        quad_result r = integrate_adaptive_simpson(f, -inner_half, inner_half,
                                                   std::min(q.rel_tol, 1e-9), 0.0,
                                                   q.inner_panels);
        if (!std::isfinite(r.value))
            throw payoff_not_integrable("price_generic_quadrature: inner expectation diverged");
        return disc * r.value;
    };
    quad_result outer = mix_expectation(m, q, inner);
    if (!std::isfinite(outer.value))
        throw payoff_not_integrable("price_generic_quadrature: outer mixture diverged");
    return outer.value;
}

price_result price_quadrature(const model_params& p, const rates_curve& rates,
                              const option_spec& spec, const quadrature_settings& q) {
    switch (spec.kind) {
    case option_kind::vanilla_call:
        return price_call_quadrature(p, rates, spec, q);
    case option_kind::vanilla_put:
        return price_put(p, rates, spec, q);
    case option_kind::cash_or_nothing_call:
        return price_binary_quadrature(p, rates, spec, q);
    case option_kind::generic: {
        price_result r;
        r.price = price_generic_quadrature(p, rates, spec, q);
        return r;
    }
    }
    throw std::invalid_argument("price_quadrature: unknown contract kind");
}

} // namespace sentopt
