#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sentopt {

// Uniform time grid on [0, horizon]. times[i] = horizon * i / n, so the
// endpoints are exact.
struct time_grid {
    double horizon = 0.0;
    std::size_t n_steps = 0;

    static time_grid uniform(double horizon, double dt_request) {
        if (horizon <= 0.0)
            throw std::invalid_argument("time_grid: horizon must be positive");
        if (dt_request <= 0.0)
            throw std::invalid_argument("time_grid: dt must be positive");
        double raw = horizon / dt_request;
        auto n = std::size_t(raw);
        if (raw - double(n) > 1e-9)
            ++n;
        time_grid g;
        g.horizon = horizon;
        g.n_steps = n == 0 ? 1 : n;
        return g;
    }

    double dt() const { return horizon / double(n_steps); }
    double time_at(std::size_t i) const { return horizon * double(i) / double(n_steps); }
    std::size_t n_points() const { return n_steps + 1; }

    std::vector<double> times() const {
        std::vector<double> t(n_points());
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] = time_at(i);
        return t;
    }
};

// Default step: a tenth of a trading day, never coarser than the delay.
inline double default_dt(double tau) { return std::min(tau, 1.0 / 2520.0); }

} // namespace sentopt
