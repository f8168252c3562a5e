#include "sentopt/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sentopt {

namespace {
constexpr double time_eps = 1e-12;
}

initial_curve initial_curve::sampled(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2)
        throw std::invalid_argument("initial_curve: need at least two samples");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].first <= points[i - 1].first)
            throw std::invalid_argument("initial_curve: sample times must be strictly increasing");
    initial_curve c;
    c.constant_ = false;
    c.pts_ = std::move(points);
    return c;
}

double initial_curve::value_at(double t) const {
    if (constant_)
        return level_;
    if (t < pts_.front().first - time_eps || t > pts_.back().first + time_eps)
        throw std::out_of_range("initial_curve: time outside history window");
    t = std::clamp(t, pts_.front().first, pts_.back().first);
    auto it = std::upper_bound(pts_.begin(), pts_.end(), t,
                               [](double v, const auto& p) { return v < p.first; });
    if (it == pts_.begin())
        return pts_.front().second;
    if (it == pts_.end())
        return pts_.back().second;
    auto lo = *(it - 1);
    auto hi = *it;
    double w = (t - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
}

double initial_curve::integral(double a, double b) const {
    if (b < a)
        throw std::invalid_argument("initial_curve::integral: b < a");
    if (constant_)
        return level_ * (b - a);
    // trapezoid over the curve's own nodes restricted to [a,b]; exact since
    // the curve is piecewise linear
    double sum = 0.0;
    double prev_t = a;
    double prev_v = value_at(a);
    for (const auto& [t, v] : pts_) {
        if (t <= a + time_eps)
            continue;
        if (t >= b - time_eps)
            break;
        sum += 0.5 * (prev_v + v) * (t - prev_t);
        prev_t = t;
        prev_v = v;
    }
    sum += 0.5 * (prev_v + value_at(b)) * (b - prev_t);
    return sum;
}

double initial_curve::min_value() const {
    if (constant_)
        return level_;
    double m = std::numeric_limits<double>::infinity();
    for (const auto& [t, v] : pts_)
        m = std::min(m, v);
    return m;
}

double confidence_params::phi0() const { return phi.value_at(0.0); }

double confidence_params::phi_at(double t) const {
    if (t < -hist_len - time_eps || t > time_eps)
        throw std::out_of_range("phi_at: time outside [-L, 0]");
    return phi.value_at(std::clamp(t, -hist_len, 0.0));
}

double confidence_params::head_integral(double a, double b) const {
    if (a < -hist_len - time_eps || b > time_eps || b < a)
        throw std::out_of_range("head_integral: interval outside [-L, 0]");
    return phi.integral(std::clamp(a, -hist_len, 0.0), std::clamp(b, -hist_len, 0.0));
}

rates_curve::rates_curve(std::vector<std::pair<double, double>> segments) : segs_(std::move(segments)) {
    if (segs_.empty())
        throw std::invalid_argument("rates_curve: no segments");
    double prev = 0.0;
    for (const auto& [end, r] : segs_) {
        if (end <= prev)
            throw std::invalid_argument("rates_curve: segment end times must be strictly increasing");
        prev = end;
    }
}

rates_curve rates_curve::constant(double r) {
    return rates_curve({{std::numeric_limits<double>::infinity(), r}});
}

double rates_curve::horizon() const { return segs_.back().first; }

double rates_curve::rate_at(double t) const {
    if (t < -time_eps || t > horizon() + time_eps)
        throw std::out_of_range("rates_curve: time outside coverage");
    for (const auto& [end, r] : segs_)
        if (t <= end)
            return r;
    return segs_.back().second;
}

double rates_curve::integral(double t0, double t1) const {
    if (t0 < -time_eps || t1 < t0 || t1 > horizon() + time_eps)
        throw std::out_of_range("rates_curve: integration interval outside coverage");
    double sum = 0.0;
    double lo = t0;
    for (const auto& [end, r] : segs_) {
        if (lo >= end)
            continue;
        double hi = std::min(t1, end);
        if (hi > lo)
            sum += r * (hi - lo);
        lo = hi;
        if (lo >= t1)
            break;
    }
    return sum;
}

double rates_curve::discount(double t0, double t1) const { return std::exp(-integral(t0, t1)); }

double option_spec::evaluate(double s_terminal) const {
    switch (kind) {
    case option_kind::vanilla_call:
        return std::max(s_terminal - strike, 0.0);
    case option_kind::vanilla_put:
        return std::max(strike - s_terminal, 0.0);
    case option_kind::cash_or_nothing_call:
        return s_terminal > strike ? payout : 0.0;
    case option_kind::generic:
        if (!payoff)
            throw std::invalid_argument("option_spec: generic contract without payoff function");
        return payoff(s_terminal);
    }
    return 0.0;
}

const char* option_kind_name(option_kind k) {
    switch (k) {
    case option_kind::vanilla_call: return "vanilla_call";
    case option_kind::vanilla_put: return "vanilla_put";
    case option_kind::cash_or_nothing_call: return "cash_or_nothing_call";
    case option_kind::generic: return "generic";
    }
    return "?";
}

std::vector<validation_issue> validate(const model_params& p) {
    std::vector<validation_issue> out;
    auto bad = [&](validation_error c, std::string msg) { out.push_back({c, std::move(msg)}); };

    if (p.conf.hist_len <= 0.0)
        bad(validation_error::non_positive_history, "history length L must be positive");
    if (p.conf.sigma_p < 0.0)
        bad(validation_error::negative_sigma_p, "sigma_P must be nonnegative");
    if (p.conf.mu_p == 0.0 || p.mu_s == 0.0)
        bad(validation_error::zero_drift, "mu_P and mu_S must be nonzero");
    if (p.conf.hist_len > 0.0 && p.conf.phi.min_value() <= 0.0)
        bad(validation_error::non_positive_phi, "initial confidence must be strictly positive on [-L, 0]");
    if (p.tau <= 0.0)
        bad(validation_error::non_positive_delay, "delay tau must be positive");
    if (p.conf.hist_len > 0.0 && p.tau >= p.conf.hist_len)
        bad(validation_error::delay_exceeds_history, "delay tau must be smaller than the history length L");
    if (p.sigma_s <= 0.0)
        bad(validation_error::non_positive_sigma_s, "sigma_S must be positive");
    if (p.rho < 0.0 || p.rho > 1.0)
        bad(validation_error::rho_out_of_range, "rho must lie in [0, 1]");
    if (p.s0 <= 0.0)
        bad(validation_error::non_positive_spot, "initial price s0 must be positive");
    return out;
}

const model_params& validate_or_throw(const model_params& p) {
    auto issues = validate(p);
    if (issues.empty())
        return p;
    std::ostringstream os;
    os << "invalid model parameters:";
    for (const auto& i : issues)
        os << "\n  - " << i.what;
    throw std::invalid_argument(os.str());
}

std::vector<validation_issue> validate_contract(const option_spec& spec, const model_params& p) {
    std::vector<validation_issue> out;
    if (spec.maturity <= p.tau)
        out.push_back({validation_error::window_too_short,
                       "maturity T must exceed the delay tau"});
    if (spec.kind != option_kind::generic && spec.strike <= 0.0)
        out.push_back({validation_error::non_positive_spot, "strike must be positive"});
    if (spec.kind == option_kind::cash_or_nothing_call && spec.payout <= 0.0)
        out.push_back({validation_error::non_positive_spot, "cash payout A must be positive"});
    return out;
}

} // namespace sentopt
