#pragma once

#include <utility>
#include <vector>

namespace skdv {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    std::vector<std::pair<double, double>> points; // (log x, log y)
};

// Least-squares line through (log x, log y).  Requires >= 3 strictly
// positive pairs; throws FitError otherwise.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& xy);

} // namespace skdv
