#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace sentopt {

inline double norm_pdf(double x) {
    static constexpr double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

inline double norm_cdf(double x) {
    static constexpr double inv_sqrt_2 = 0.7071067811865475244;
    return 0.5 * std::erfc(-x * inv_sqrt_2);
}

// Neumaier compensated accumulator. Keeps parallel-chunked reductions
// reproducible to ~1e-15 relative independent of summation order.
struct kahan_sum {
    double s = 0.0;
    double c = 0.0;

    void add(double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct sample_stats {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased (n-1)
    double std_dev = 0.0;
    double se_mean = 0.0;
    double se_variance = 0.0; // sqrt((m4 - m2^2)/n), m_k central sample moments
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
};

sample_stats summarize(std::span<const double> xs);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_distance(std::vector<double> a, std::vector<double> b);

} // namespace sentopt
