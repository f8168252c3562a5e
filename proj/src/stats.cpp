#include "sentopt/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace sentopt {

sample_stats summarize(std::span<const double> xs) {
    sample_stats st;
    st.n = xs.size();
    if (st.n == 0)
        return st;

    kahan_sum acc;
    for (double x : xs)
        acc.add(x);
    st.mean = acc.value() / double(st.n);

    kahan_sum m2, m3, m4;
    for (double x : xs) {
        double d = x - st.mean;
        double d2 = d * d;
        m2.add(d2);
        m3.add(d2 * d);
        m4.add(d2 * d2);
    }
    double n = double(st.n);
    double c2 = m2.value() / n;
    double c3 = m3.value() / n;
    double c4 = m4.value() / n;

    st.variance = st.n > 1 ? m2.value() / (n - 1.0) : 0.0;
    st.std_dev = std::sqrt(st.variance);
    st.se_mean = st.n > 1 ? st.std_dev / std::sqrt(n) : 0.0;
    st.se_variance = st.n > 1 ? std::sqrt(std::max(0.0, c4 - c2 * c2) / n) : 0.0;
    if (c2 > 0.0) {
        st.skewness = c3 / std::pow(c2, 1.5);
        st.excess_kurtosis = c4 / (c2 * c2) - 3.0;
    }
    return st;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_distance: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    const double na = double(a.size()), nb = double(b.size());
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(double(i) / na - double(j) / nb));
    }
    return d;
}

} // namespace sentopt
