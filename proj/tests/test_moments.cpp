#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sentopt/moments.hpp"
#include "sentopt/quadrature.hpp"
#include "sentopt/simulate.hpp"
#include "sentopt/stats.hpp"

using namespace sentopt;

namespace {

constexpr double week = 5.0 / 252.0;
constexpr double quarter = 63.0 / 252.0;

model_params table_one_params() {
    model_params m;
    m.conf.mu_p = 0.03;
    m.conf.sigma_p = 0.35;
    m.conf.hist_len = 2.0 * week;
    m.conf.phi = initial_curve::constant(100.0);
    m.mu_s = 1e-5;
    m.sigma_s = 0.04;
    m.tau = week;
    m.rho = 0.0;
    m.s0 = 450.0;
    return m;
}

} // namespace

TEST_CASE("mean of X inside the deterministic window") {
    model_params m = table_one_params();
    for (double t : {0.0, 0.3 * week, week})
        CHECK(mean_x(m, t) == doctest::Approx(100.0 * t).epsilon(1e-14));
}

TEST_CASE("mean of X beyond the window matches direct arithmetic") {
    model_params m = table_one_params();
    const double expected =
        100.0 * week + (100.0 / 0.03) * (std::exp(0.03 * (quarter - week)) - 1.0);
    CHECK(mean_x(m, quarter) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("both branches join continuously at the delay") {
    model_params m = table_one_params();
    const double eps = 1e-9;
    CHECK(std::abs(mean_x(m, m.tau + eps) - mean_x(m, m.tau - eps)) <
          1e-12 * mean_x(m, m.tau) + 100.0 * 2 * eps);
    CHECK(mean_x(m, m.tau) == doctest::Approx(100.0 * m.tau).epsilon(1e-14));
    CHECK(var_x(m, m.tau) == 0.0);
    CHECK(var_x(m, m.tau + eps) < 1e-8);
}

TEST_CASE("variance of X vanishes in the deterministic window") {
    model_params m = table_one_params();
    for (double t : {0.0, 0.5 * week, week})
        CHECK(var_x(m, t) == 0.0);
}

TEST_CASE("variance collapses when the confidence volatility is zero") {
    model_params m = table_one_params();
    m.conf.sigma_p = 0.0;
    const double mx = mean_x(m, quarter);
    CHECK(std::abs(var_x(m, quarter)) <= 1e-10 * mx * mx);
}

TEST_CASE("degenerate denominators are rejected") {
    model_params m = table_one_params();
    m.conf.mu_p = -m.conf.sigma_p * m.conf.sigma_p;  // mu_P + sigma_P^2 = 0
    CHECK_THROWS_AS(var_x(m, quarter), std::domain_error);
    m.conf.mu_p = -0.5 * m.conf.sigma_p * m.conf.sigma_p;  // 2 mu_P + sigma_P^2 = 0
    CHECK_THROWS_AS(var_x(m, quarter), std::domain_error);
}

TEST_CASE("moments against a Monte Carlo oracle") {
    model_params m = table_one_params();
    rates_curve rates = rates_curve::constant(0.0);
    time_grid grid = time_grid::uniform(quarter, 1.0 / 2520.0);
    std::vector<std::size_t> marks = {50, 252, 630};  // tau, 0.1, 0.25
    const std::size_t n = 20000;
    auto cp = simulate_checkpoints(m, rates, grid, marks, n, 2024, measure_kind::physical);

    for (std::size_t c = 0; c < marks.size(); ++c) {
        const double t = cp.times[c];
        sample_stats sx = summarize(cp.x[c]);
        const double se_mean = std::max(sx.se_mean, 1e-9 * std::abs(sx.mean));
        CHECK(std::abs(mean_x(m, t) - sx.mean) < 3.0 * se_mean);
        const double se_var = std::max(sx.se_variance, 1e-9 * sx.variance);
        CHECK(std::abs(var_x(m, t) - sx.variance) < 3.0 * se_var + 1e-12);

        moment_pair lp = moments_log_price(m, t);
        sample_stats sl = summarize(cp.log_price[c]);
        CHECK(std::abs(lp.mean - sl.mean) < 3.0 * std::max(sl.se_mean, 1e-12));
        CHECK(std::abs(lp.variance - sl.variance) < 3.0 * std::max(sl.se_variance, 1e-12));
    }
}

TEST_CASE("variance is nonnegative across a randomized parameter sweep") {
    std::mt19937 gen(4711);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        model_params m = table_one_params();
        m.conf.mu_p = -0.5 + u(gen);
        if (m.conf.mu_p == 0.0)
            continue;
        m.conf.sigma_p = 1e-3 + (1.0 - 1e-3) * u(gen);
        double t = m.tau + (1.0 - m.tau) * u(gen);
        try {
            CHECK(var_x(m, t) >= 0.0);
            ++checked;
        } catch (const std::domain_error&) {
            // parameter draw hit a degenerate denominator; not a valid draw
        }
    }
    CHECK(checked > 900);
}

TEST_CASE("mean of X is strictly increasing") {
    model_params m = table_one_params();
    double prev = mean_x(m, 0.0);
    for (int k = 1; k <= 50; ++k) {
        double t = 0.3 * double(k) / 50.0;
        double cur = mean_x(m, t);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("confidence cross moments") {
    model_params m = table_one_params();
    const double phi0 = 100.0;
    CHECK(cross_moment_p(m, 0.0, 0.0) == doctest::Approx(phi0 * phi0));
    const double t = 0.2;
    CHECK(cross_moment_p(m, 0.0, t) == doctest::Approx(phi0 * phi0 * std::exp(0.03 * t)));
    const double two_mu_s2 = 2.0 * 0.03 + 0.35 * 0.35;
    CHECK(cross_moment_p(m, t, t) == doctest::Approx(phi0 * phi0 * std::exp(two_mu_s2 * t)));
    CHECK(cross_moment_p(m, 0.07, 0.19) == cross_moment_p(m, 0.19, 0.07));
}

TEST_CASE("closed-form variance agrees with double integration of cross moments") {
    model_params m = table_one_params();
    const double s = quarter - m.tau;

    // 2 * int_0^s int_0^v E[P_u P_v] du dv - (E int_0^s P)^2, by nested
    // Gauss-Legendre; independent route through the cross-moment surface
    const auto& nodes = gauss_legendre_nodes(64);
    double outer = 0.0;
    for (const auto& [xv, wv] : nodes) {
        const double v = 0.5 * s * (xv + 1.0);
        double inner = 0.0;
        for (const auto& [xu, wu] : nodes) {
            const double uu = 0.5 * v * (xu + 1.0);
            inner += wu * cross_moment_p(m, uu, v);
        }
        outer += wv * inner * 0.5 * v;
    }
    const double second_moment = 2.0 * outer * 0.5 * s;
    const double mean = mean_x(m, quarter) - 100.0 * m.tau;
    const double var_indirect = second_moment - mean * mean;
    CHECK(var_x(m, quarter) == doctest::Approx(var_indirect).epsilon(1e-6));
}

TEST_CASE("log-price moments at time zero and inside the window") {
    model_params m = table_one_params();
    moment_pair at0 = moments_log_price(m, 0.0);
    CHECK(at0.mean == doctest::Approx(std::log(450.0)).epsilon(1e-15));
    CHECK(at0.variance == 0.0);

    const double t = 0.6 * m.tau;
    moment_pair in = moments_log_price(m, t);
    const double drift = 1e-5 - 0.5 * 0.04 * 0.04;
    CHECK(in.mean == doctest::Approx(std::log(450.0) + drift * 100.0 * t).epsilon(1e-14));
    CHECK(in.variance == doctest::Approx(0.04 * 0.04 * 100.0 * t).epsilon(1e-14));
}
