#pragma once

#include <cmath>

namespace skdv {

// Even smooth cutoff equal to 1 on [-1, 1] and 0 outside (-2, 2), with an
// exponential-bump transition on 1 < |t| < 2.
inline double bump_window(double t) {
    const double a = std::abs(t);
    if (a <= 1.0)
        return 1.0;
    if (a >= 2.0)
        return 0.0;
    const double r = a - 1.0; // in (0, 1)
    return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

// bump_window(t / delta): plateau |t| <= delta, support [-2*delta, 2*delta].
inline double bump_window(double t, double delta) {
    return bump_window(t / delta);
}

} // namespace skdv
