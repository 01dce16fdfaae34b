#pragma once

#include "skdv/field.hpp"

#include <cmath>

namespace skdv {

// Coupling constants of the short-wave/long-wave system
//   i u_t + u_xx = alpha u v + beta |u|^2 u
//   v_t + v_xxx + (1/2)(v^2)_x = gamma (|u|^2)_x
// plus the Sobolev indices of the data classes.
struct SystemParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double s = 0.0;
    double l = 0.0;

    bool finite() const {
        return std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma) &&
               std::isfinite(s) && std::isfinite(l);
    }
};

struct SystemState {
    ComplexField u;
    RealField v;
    double t = 0.0;
};

struct SolverConfig {
    double dt = 1e-3;
    bool dealias = true;
    int record_every = 1;
};

} // namespace skdv
