#pragma once

#include "skdv/inflation.hpp"
#include "skdv/rng.hpp"
#include "skdv/spacetime.hpp"

namespace skdv {

// Which space-time product inequality a case exercises.
enum class EstimateKind {
    SchrodingerProduct, // |uv|_{X_{s,b'-1}}        vs |u|_{X_{s,b}} |v|_{Y_{l,c}}
    KdvOutput,          // |(u1 conj(u2))_x|_{Y_{l,c'-1}} vs |u1|_X |u2|_X
    KdvProduct,         // |(v1 v2)_x|_{Y_{l,c'-1}} vs |v1|_{Y_{l,c}} |v2|_{Y_{l,c}}
    NlsTrilinear,       // |u1 u2 conj(u3)|_{L^2}   vs product of X_{s,b} norms
};

struct EstimateResolution {
    int nx = 256;
    int nt = 256;
    double L = 8.0 * M_PI;
    double T = 4.0; // half-length of the time window
};

struct EstimateCase {
    EstimateKind kind = EstimateKind::SchrodingerProduct;
    double s = 0.0;
    double l = -0.5;
    double b = 0.51;
    double bp = 0.51; // b'
    double c = 0.51;
    double cp = 0.51; // c'
    EstimateResolution resolution;

    void validate() const;
};

// LHS norm over the product of RHS norms for the case's inequality; the
// product is formed pointwise in physical space with 2/3 dealiasing and all
// norms are discrete X_{s,b} norms.  Throws UndefinedRatioError when the
// right-hand side vanishes.
struct RatioParts {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

RatioParts bilinear_parts(const EstimateCase& c, const SpaceTimeField& u,
                          const SpaceTimeField& v);
RatioParts trilinear_parts(const EstimateCase& c, const SpaceTimeField& u1,
                           const SpaceTimeField& u2, const SpaceTimeField& u3);

double bilinear_ratio(const EstimateCase& c, const SpaceTimeField& u,
                      const SpaceTimeField& v);
double trilinear_ratio(const EstimateCase& c, const SpaceTimeField& u1,
                       const SpaceTimeField& u2, const SpaceTimeField& u3);

// Frequency-localized random input: unit-variance complex Gaussians on the
// lattice box xi in [xi_lo, xi_hi], modulation band |tau + phi(xi)| <= w,
// synthesized and then cut off by the bump window at scale delta.
struct LocalizedBand {
    double xi_lo = 1.0;
    double xi_hi = 2.0;
    double mod_halfwidth = 4.0;
    Dispersion dispersion = Dispersion::Schrodinger;
};

SpaceTimeField make_localized_field(const Grid& g, int nt, double dt,
                                    const LocalizedBand& band, Rng& rng,
                                    double window_delta = 1.0);

// Indicator-type counterexample pair evaluated directly in continuum
// (xi, tau) space: u1 on upsilon1 with modulation band 100 around the
// short-wave surface, the conjugate factor on upsilon2 with band 10, output
// restricted to {xi in upsilon, |tau - xi^3| <= 10}.  Norms of the
// indicator data come from their support measures under the case weights.
struct CounterexampleResult {
    double N = 0.0;
    double lhs = 0.0;
    double norm_u1 = 0.0;
    double norm_u2 = 0.0;
    double ratio = 0.0;
    double max_abs_q1 = 0.0; // over quadrature nodes, expected <= 1/10
    bool small_N_warning = false;
};

CounterexampleResult counterexample_family(double N_target, const EstimateCase& c);

} // namespace skdv
