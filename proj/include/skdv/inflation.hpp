#pragma once

#include "skdv/fft.hpp"
#include "skdv/fit.hpp"
#include "skdv/params.hpp"

#include <vector>

namespace skdv {

struct FrequencyInterval {
    double center = 0.0;
    double half_width = 0.0;

    double lo() const { return center - half_width; }
    double hi() const { return center + half_width; }
    bool contains(double x) const { return std::abs(x - center) <= half_width; }
};

// Parameters of the high/low frequency box construction driving the
// second-iterate growth experiment.  N is snapped so (N - 1/2)^3 is an
// exact multiple of 2*pi, which locks the cubic phase at the box center.
//
// Boxes (all built from N and n):
//   upsilon   : |xi - (N - 1/2)|        <= 1/(100 N^2)   output window
//   upsilon1  : |xi - (N - N^2/2 - 3/8)| <= 1/N           low factor box
//   upsilon2  : |xi - (N^2/2 - 1/8)|    <= 1/(200 N)     high factor box
//   lambda    : |xi - 1|                <= N^{-n}        long-wave box
// For every xi in upsilon and xi2 in upsilon2, xi - xi2 lies in upsilon1,
// and upsilon itself is covered by upsilon1 + upsilon2.
//
// Data amplitudes: u_hat = eps0 N^{-2s+1/2} on the u boxes,
// v_hat = eps0 N^{n/2} on lambda.
struct InflationConfig {
    double N = 0.0;
    long long k = 0; // (N - 1/2)^3 = 2*pi*k
    double eps0 = 1e-2;
    int n = 6;
    double s = 0.0;
    double l = 1.0;
    int quad_outer = 64;
    int quad_inner = 128;

    static InflationConfig make(double N_target, double eps0, int n, double s,
                                double l, int quad_outer = 64, int quad_inner = 128);

    FrequencyInterval upsilon() const;
    FrequencyInterval upsilon1() const;
    FrequencyInterval upsilon2() const;
    FrequencyInterval lambda_box() const;

    double u_amplitude() const;
    double v_amplitude() const;

    // Checks the phase snapping and the box inclusions above.
    void validate() const;
};

// Oscillatory time kernel K(Q, t) = (1 - exp(-i Q t)) / (i Q); the Q -> 0
// singularity is removable (K -> t) and guarded by a series for |Q| < 1e-6.
// |K(Q, t)| <= |t| for all real Q, t.
cplx time_kernel(double Q, double t);

// Resonance functions: the phase mismatch of the Duhamel integrands.
// q1 = xi (xi^2 + xi - 2 xi2) == xi^3 + (xi - xi2)^2 - xi2^2,
// q2 = 3 xi (xi - xi2) xi2.
double resonance_q1(double xi, double xi2);
double resonance_q2(double xi, double xi2);
// Cancellation-free forms in box offsets: p = xi - (N - 1/2) for q1 with
// e = xi2 - (N^2/2 - 1/8); for q2, r = xi - 2 and q = xi2 - 1.
double resonance_q1_offsets(double N, double p, double e);
double resonance_q2_offsets(double r, double q);

// Spatial Fourier transform of the second iterate of the data-to-solution
// map at (xi, t):
//   i xi e^{i t xi^3} [ gamma I_u(xi,t) - (1/2) I_v(xi,t) ],
// where I_u convolves the short-wave box data against the kernel
// K(q1(xi, .), t) and I_v convolves the long-wave data against
// K(q2(xi, .), t).  Zero outside the convolution supports.  When
// symmetrize_v is set, the long-wave data lives on lambda and its mirror
// (real-spectrum-symmetric variant).
cplx second_iterate_hat(double xi, double t, const InflationConfig& cfg,
                        const SystemParams& p, bool symmetrize_v = false);

struct InflationRow {
    double N = 0.0;
    long long k = 0;
    double G_total = 0.0; // <xi>^l-weighted L^2 norm over upsilon, max over t grid
    double G_nls = 0.0;   // short-wave pair term alone (equals G_total on upsilon)
    double G_kdv = 0.0;   // long-wave self-interaction norm over its own window
    double slope_so_far = 0.0;
    double phase_min = 0.0;       // min Re(e^{i xi^3} e^{-i t' q1}) over nodes
    double quad_rel_change = 0.0; // |G(2x nodes) - G| / G
};

struct InflationReport {
    std::vector<InflationRow> rows;
    FitResult fit_total;
    FitResult fit_kdv;
    double phase_min = 0.0;
    double s = 0.0, l = 0.0, eps0 = 0.0, gamma = 0.0;
    int n = 0, quad_outer = 0, quad_inner = 0;
};

// Sweeps the snapped cutoffs, computes G(N) and the long-wave term's norm,
// and fits both exponents.  Throws FitError for fewer than 3 cutoffs.
InflationReport inflation_experiment(double s, double l,
                                     const std::vector<double>& N_targets,
                                     double eps0, int n, int quad_outer = 64,
                                     int quad_inner = 128, double gamma = 1.0);

} // namespace skdv
