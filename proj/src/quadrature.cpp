#include "skdv/quadrature.hpp"

#include "skdv/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace skdv {

namespace {

QuadRule build_gauss_legendre(int n) {
    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

} // namespace

const QuadRule& gauss_legendre(int n) {
    if (n < 1)
        throw InvalidInputError("quadrature order must be positive");
    static std::map<int, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_gauss_legendre(n)).first;
    return it->second;
}

QuadRule gauss_legendre(int n, double a, double b) {
    const QuadRule& base = gauss_legendre(n);
    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.x[i] = mid + half * base.x[i];
        rule.w[i] = half * base.w[i];
    }
    return rule;
}

double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2)
        return 0.0;
    double acc = 0.5 * (f.front() + f.back());
    for (size_t i = 1; i + 1 < f.size(); ++i)
        acc += f[i];
    return acc * h;
}

cplx trapezoid(const std::vector<cplx>& f, double h) {
    if (f.size() < 2)
        return 0.0;
    cplx acc = 0.5 * (f.front() + f.back());
    for (size_t i = 1; i + 1 < f.size(); ++i)
        acc += f[i];
    return acc * h;
}

std::vector<cplx> cumulative_integral(const std::vector<cplx>& f, double h) {
    const size_t n = f.size();
    if (n < 3)
        throw ResolutionError("cumulative_integral needs at least 3 samples");
    std::vector<cplx> out(n);
    out[0] = 0.0;
    // Increment over [y_m, y_{m+1}] from the parabola through the three
    // nearest samples (Simpson-type end-corrected rule).
    for (size_t m = 0; m + 1 < n; ++m) {
        cplx inc;
        if (m == 0)
            inc = h / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
        else
            inc = h / 12.0 * (-f[m - 1] + 8.0 * f[m] + 5.0 * f[m + 1]);
        out[m + 1] = out[m] + inc;
    }
    return out;
}

} // namespace skdv
