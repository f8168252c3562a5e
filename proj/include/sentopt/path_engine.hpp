#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sentopt/grid.hpp"
#include "sentopt/model.hpp"
#include "sentopt/rng.hpp"

namespace sentopt {

enum class measure_kind { physical, minimal_martingale };

// Grid-level tables shared by every path: delayed-confidence lookup plan and
// rate integrals. Built once so the per-step work stays branch-light.
class step_tables {
public:
    step_tables(const model_params& p, const rates_curve& rates, const time_grid& grid,
                measure_kind measure);

    const time_grid& grid() const { return grid_; }
    measure_kind measure() const { return measure_; }
    double dt() const { return dt_; }

    // Delayed confidence at grid point i: for t_i - tau <= 0 a precomputed
    // phi value, otherwise linear interpolation between P at grid index
    // lag_index(i) and the next sample (weight 0 means an exact grid hit).
    bool delayed_from_history(std::size_t i) const { return i < first_stochastic_; }
    double history_value(std::size_t i) const { return hist_val_[i]; }
    std::size_t lag_index(std::size_t i) const { return lag_idx_[i]; }
    double lag_weight(std::size_t i) const { return lag_w_[i]; }

    std::size_t ring_capacity() const { return ring_cap_; }
    double rate_at(std::size_t i) const { return rate_[i]; }
    double cum_rate(std::size_t i) const { return cum_rate_[i]; }

    double log_drift_mult() const { return log_drift_mult_; }
    double p_log_drift() const { return p_log_drift_; }
    double p_vol_step() const { return p_vol_step_; }
    double rho() const { return rho_; }
    double rho_orth() const { return rho_orth_; }
    double p0() const { return p0_; }
    double s0() const { return s0_; }
    double sigma_s() const { return sigma_s_; }
    double mu_s() const { return mu_s_; }

private:
    time_grid grid_;
    measure_kind measure_;
    double dt_;
    std::size_t first_stochastic_;
    std::vector<double> hist_val_;
    std::vector<std::size_t> lag_idx_;
    std::vector<double> lag_w_;
    std::size_t ring_cap_;
    std::vector<double> rate_;
    std::vector<double> cum_rate_;
    double log_drift_mult_, p_log_drift_, p_vol_step_;
    double rho_, rho_orth_, p0_, s0_, sigma_s_, mu_s_;
};

// Single-path state machine. One instance per worker thread; reset() rebinds
// it to a path substream and step() advances one grid interval. Every draw is
// addressed by (seed, path, step), so results are independent of scheduling.
class path_engine {
public:
    explicit path_engine(const step_tables& tab)
        : tab_(tab), ring_(tab.ring_capacity(), 0.0) {}

    void reset(std::uint64_t seed, std::uint64_t path_index) {
        seed_ = seed;
        path_ = path_index;
        step_ = 0;
        p_ = tab_.p0();
        log_s_rel_ = 0.0;
        x_ = 0.0;
        ring_head_ = 0;
        ring_[0] = p_;
        pd_prev_ = delayed_at(0);
        lw_ = 0.0;
        lv_ = 0.0;
        z_conf_ = z_orth_ = 0.0;
    }

    void step() {
        auto z = normal_pair(seed_, path_, step_);
        step_with(z[0], z[1]);
    }

    // Advance with caller-supplied draws (replay of a stored path).
    void step_with(double z_conf, double z_orth) {
        z_conf_ = z_conf;
        z_orth_ = z_orth;
        const double dt = tab_.dt();

        // exact-in-distribution GBM update for the confidence factor
        p_ *= std::exp(tab_.p_log_drift() + tab_.p_vol_step() * z_conf);
        ring_head_ = ring_head_ + 1 == ring_.size() ? 0 : ring_head_ + 1;
        ring_[ring_head_] = p_;

        const double pd_next = delayed_at(step_ + 1);
        const double integ = 0.5 * dt * (pd_prev_ + pd_next);
        const double z_s = tab_.rho() * z_conf + tab_.rho_orth() * z_orth;
        log_s_rel_ += tab_.log_drift_mult() * integ + tab_.sigma_s() * std::sqrt(integ) * z_s;
        x_ += integ;

        if (want_density_) {
            const double a0 = alpha(pd_prev_, tab_.rate_at(step_));
            const double a1 = alpha(pd_next, tab_.rate_at(step_ + 1));
            lw_ -= a0 * std::sqrt(dt) * z_s;           // left-point dW sum
            lv_ -= 0.25 * dt * (a0 * a0 + a1 * a1);    // trapezoid ds term
        }
        pd_prev_ = pd_next;
        ++step_;
    }

    void enable_density() { want_density_ = true; }

    std::size_t current_step() const { return step_; }
    double confidence() const { return p_; }
    double integrated_info() const { return x_; }
    double last_z_conf() const { return z_conf_; }
    double last_z_orth() const { return z_orth_; }

    double log_price() const {
        double v = std::log(tab_.s0()) + log_s_rel_;
        if (tab_.measure() == measure_kind::minimal_martingale)
            v += tab_.cum_rate(step_);  // S = B * S-tilde
        return v;
    }
    double price() const { return std::exp(log_price()); }
    double discounted_price() const { return std::exp(log_price() - tab_.cum_rate(step_)); }

    // Radon-Nikodym weight accumulated so far (physical measure paths only).
    double density_weight() const { return std::exp(lw_ + lv_); }

private:
    double alpha(double delayed_conf, double r) const {
        return (tab_.mu_s() * delayed_conf - r) / (tab_.sigma_s() * std::sqrt(delayed_conf));
    }

    // P at grid index `back` steps behind the newest ring sample.
    double ring_back(std::size_t back) const {
        return ring_[(ring_head_ + ring_.size() - back) % ring_.size()];
    }

    // Delayed confidence at grid point i; valid only when i is the newest
    // grid index held in the ring (i == step right after the P update).
    double delayed_at(std::size_t i) const {
        if (tab_.delayed_from_history(i))
            return tab_.history_value(i);
        const std::size_t j = tab_.lag_index(i);
        const double w = tab_.lag_weight(i);
        const double lo = ring_back(i - j);
        if (w == 0.0)
            return lo;
        return lo + w * (ring_back(i - j - 1) - lo);
    }

    const step_tables& tab_;
    std::vector<double> ring_;
    std::size_t ring_head_ = 0;
    std::uint64_t seed_ = 0, path_ = 0;
    std::size_t step_ = 0;
    double p_ = 0.0, log_s_rel_ = 0.0, x_ = 0.0, pd_prev_ = 0.0;
    double z_conf_ = 0.0, z_orth_ = 0.0;
    bool want_density_ = false;
    double lw_ = 0.0, lv_ = 0.0;
};

} // namespace sentopt
