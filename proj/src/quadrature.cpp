#include "sentopt/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sentopt/errors.hpp"

namespace sentopt {

void check_settings(const quadrature_settings& q) {
    if (q.n_nodes < 16)
        throw std::invalid_argument("quadrature_settings: n_nodes must be >= 16");
    if (!(q.rel_tol > 0.0) || q.rel_tol > 1e-6)
        throw std::invalid_argument("quadrature_settings: rel_tol must be in (0, 1e-6]");
    if (q.z_max < 4.0)
        throw std::invalid_argument("quadrature_settings: z_max must be >= 4");
}

static std::vector<std::pair<double, double>> compute_gl(int n) {
    // Newton iteration on Legendre polynomials, symmetric nodes
    std::vector<std::pair<double, double>> nw(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (double(i) + 0.75) / (double(n) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - double(j) * p2) / (double(j) + 1.0);
            }
            pp = double(n) * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nw[i] = {-x, w};
        nw[n - 1 - i] = {x, w};
    }
    return nw;
}

const std::vector<std::pair<double, double>>& gauss_legendre_nodes(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

quad_result integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                     int n) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    auto run = [&](int nodes) {
        double sum = 0.0;
        for (const auto& [x, w] : gauss_legendre_nodes(nodes))
            sum += w * f(mid + half * x);
        return sum * half;
    };
    quad_result r;
    const int n_half = std::max(16, n / 2);
    const double coarse = run(n_half);
    r.value = run(n);
    r.evals = n + n_half;
    // spectral convergence: the n/2 -> n difference dominates the n -> 2n one
    r.error_estimate = 2.0 * std::abs(r.value - coarse) + 8.0 * 1e-16 * std::abs(r.value);
    return r;
}

namespace {

struct simpson_ctx {
    const std::function<double(double)>& f;
    double rel_tol;
    double abs_tol;
    long max_evals;
    long evals = 0;
    double err_acc = 0.0;

    double eval(double x) {
        if (++evals > max_evals)
            throw quadrature_not_converged("adaptive Simpson: evaluation budget exhausted");
        return f(x);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole, int depth,
                   double scale) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double h = b - a;
        const double left = h / 12.0 * (fa + 4.0 * flm + fm);
        const double right = h / 12.0 * (fm + 4.0 * frm + fb);
        const double err = (left + right - whole) / 15.0;
        const double tol = std::max(abs_tol, rel_tol * scale);
        if (depth <= 0 || std::abs(err) <= tol) {
            err_acc += std::abs(err);
            return left + right + err;
        }
        return recurse(a, m, fa, flm, fm, left, depth - 1, 0.5 * scale) +
               recurse(m, b, fm, frm, fb, right, depth - 1, 0.5 * scale);
    }
};

} // namespace

quad_result integrate_adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                       double rel_tol, double abs_tol, int initial_panels,
                                       long max_evals) {
    if (b <= a)
        return {};
    simpson_ctx ctx{f, rel_tol, abs_tol, max_evals};

    // coarse magnitude scan to anchor the relative tolerance
    const int np = std::max(1, initial_panels);
    std::vector<double> fs(std::size_t(2 * np) + 1);
    for (std::size_t k = 0; k < fs.size(); ++k)
        fs[k] = ctx.eval(a + (b - a) * double(k) / double(fs.size() - 1));
    double coarse = 0.0;
    const double hp = (b - a) / double(np);
    for (int k = 0; k < np; ++k)
        coarse += hp / 6.0 * (fs[2 * k] + 4.0 * fs[2 * k + 1] + fs[2 * k + 2]);
    const double scale = std::max(std::abs(coarse), 1e-300);

    double total = 0.0;
    for (int k = 0; k < np; ++k) {
        const double pa = a + hp * double(k);
        const double pb = pa + hp;
        const double whole = hp / 6.0 * (fs[2 * k] + 4.0 * fs[2 * k + 1] + fs[2 * k + 2]);
        total += ctx.recurse(pa, pb, fs[2 * k], fs[2 * k + 1], fs[2 * k + 2], whole, 48,
                             scale / double(np));
    }
    quad_result r;
    r.value = total;
    r.error_estimate = 2.0 * ctx.err_acc + 8.0 * 1e-16 * std::abs(total);
    r.evals = ctx.evals;
    return r;
}

} // namespace sentopt
