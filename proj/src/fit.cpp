#include "skdv/fit.hpp"

#include "skdv/errors.hpp"

#include <cmath>

namespace skdv {

FitResult fit_loglog(const std::vector<std::pair<double, double>>& xy) {
    const size_t n = xy.size();
    if (n < 3)
        throw FitError("fit_loglog needs at least 3 points");
    FitResult r;
    r.points.reserve(n);
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : xy) {
        if (!(x > 0.0) || !(y > 0.0))
            throw FitError("fit_loglog needs strictly positive values");
        r.points.emplace_back(std::log(x), std::log(y));
        sx += r.points.back().first;
        sy += r.points.back().second;
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [lx, ly] : r.points) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
    }
    if (sxx == 0.0)
        throw FitError("fit_loglog: degenerate abscissae");
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ss_res = 0.0;
    for (const auto& [lx, ly] : r.points) {
        const double e = ly - (r.intercept + r.slope * lx);
        ss_res += e * e;
    }
    r.stderr_slope = std::sqrt(ss_res / double(n - 2) / sxx);
    if (!std::isfinite(r.stderr_slope))
        throw FitError("fit_loglog: non-finite slope error");
    return r;
}

} // namespace skdv
