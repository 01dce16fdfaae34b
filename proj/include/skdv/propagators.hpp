#pragma once

#include "skdv/params.hpp"
#include "skdv/spacetime.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace skdv {

// exp(-i t phi(-i d_x)) applied spectrally; unit-modulus multiplier, so the
// L^2 norm is preserved exactly.
ComplexField linear_propagate(const ComplexField& f, double t, Dispersion d);
RealField linear_propagate(const RealField& f, double t, Dispersion d);

// One interaction-frame RK4 step of size cfg.dt: the stiff linear groups are
// removed exactly by their spectral phases, classical RK4 integrates the
// transformed nonlinearities
//   N_u = -i (alpha u v + beta |u|^2 u),   N_v = d_x (gamma |u|^2 - v^2/2).
// Throws BlowupError when the state leaves the representable range.
SystemState step(const SystemState& state, const SolverConfig& cfg,
                 const SystemParams& p);

struct Observer {
    std::string name;
    std::function<double(const SystemState&)> fn;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<SystemState> states; // sampled every record_every steps
    std::vector<std::string> observer_names;
    std::vector<std::vector<double>> observer_values; // [observer][sample]
    double max_v_imag_residue = 0.0;
    bool dt_stability_warning = false;
    bool blew_up = false;
    double t_blowup = 0.0;
};

// Repeated stepping to horizon T (a final partial step covers any
// remainder); observers are sampled with the stored states.  A blow-up ends
// the run early: the partial trajectory is returned with blew_up set.
Trajectory evolve(const SystemState& initial, double T, const SolverConfig& cfg,
                  const SystemParams& p, const std::vector<Observer>& observers = {});

} // namespace skdv
