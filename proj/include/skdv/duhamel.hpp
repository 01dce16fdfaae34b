#pragma once

#include "skdv/fit.hpp"
#include "skdv/params.hpp"
#include "skdv/spacetime.hpp"

#include <optional>
#include <vector>

namespace skdv {

// One step of the integral-equation fixed-point scheme.  Iterate 0 is the
// windowed free evolution of the data; the map applies the cut-off Duhamel
// integrals
//   u -> psi(t) S(t) u0 - i psi(t) int_0^t S(t-t') psi(t'/d) [a uv + b |u|^2 u] dt'
//   v -> psi(t) W(t) v0 + psi(t) int_0^t W(t-t') psi(t'/d) [g (|u|^2)_x - (v^2)_x / 2] dt'
// with the time integrals evaluated on the stored lattice.
struct PicardIterate {
    SpaceTimeField u;
    SpaceTimeField v; // real-valued content, complex storage
    double delta = 0.0;
    int k = 0;
};

PicardIterate initial_iterate(const ComplexField& u0, const RealField& v0, int nt,
                              double dt, double delta);

PicardIterate picard_map(const PicardIterate& it, const ComplexField& u0,
                         const RealField& v0, const SystemParams& p, double delta);

// sup_{x,t} of the larger of |du| and |dv|.
double sup_difference(const PicardIterate& a, const PicardIterate& b);

// Contraction scan over a time-scale list for a family of data amplitudes.
struct ContractionCell {
    double amplitude = 0.0;
    double delta = 0.0;
    bool contracted = false;
    double final_ratio = 0.0; // last consecutive sup-difference ratio
};

struct ContractionProbe {
    std::vector<ContractionCell> cells;
    struct Star {
        double amplitude = 0.0;
        double delta_star = 0.0;
        bool found = false;
    };
    std::vector<Star> stars;              // largest contracting delta per amplitude
    std::optional<FitResult> power;       // log delta* vs log amplitude
    bool conclusive = false;              // false when no delta in the list converges
};

ContractionProbe picard_contraction_probe(const ComplexField& u0_base,
                                          const RealField& v0_base,
                                          const SystemParams& p,
                                          const std::vector<double>& delta_list,
                                          const std::vector<double>& amplitudes,
                                          int nt, double dt, int iterations = 8);

} // namespace skdv
