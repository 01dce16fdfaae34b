#pragma once

#include "skdv/field.hpp"

namespace skdv {

// Smoothing Fourier multiplier: identity below the cutoff N, a fixed
// power-law decay N^{1-s} |xi|^{s-1} above 2N, and a C^2 monotone blend in
// between.  Maps H^s data into H^1 with norm equivalence constants that the
// equivalence check below reports.
struct MultiplierSpec {
    double N = 2.0; // cutoff frequency, >= 2
    double s = 0.0; // target index, < 1

    void validate() const;
};

// Pointwise multiplier value m(xi), in (0, 1].
double smoothing_multiplier(double xi, const MultiplierSpec& M);

// Spectral pointwise product with the multiplier; Nyquist zeroed.
ComplexField apply_multiplier(const ComplexField& f, const MultiplierSpec& M);
RealField apply_multiplier(const RealField& f, const MultiplierSpec& M);

struct EquivalenceRatios {
    double lower = 0.0; // |I f|_{H^1} / |f|_{H^s}, expected >= 1
    double upper = 0.0; // |I f|_{H^1} / (N^{1-s} |f|_{H^s}), expected <= 2
};

// Throws UndefinedRatioError when f vanishes.  The stated bounds hold for
// band-limited f, 0 <= s < 1, N >= 2.
EquivalenceRatios multiplier_equivalence_check(const ComplexField& f,
                                               const MultiplierSpec& M);

} // namespace skdv
