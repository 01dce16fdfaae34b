#pragma once

#include "skdv/fft.hpp"
#include "skdv/grid.hpp"

#include <vector>

namespace skdv {

// One complex-valued state component on a periodic grid.  Physical samples
// and the signed-order spectrum are kept together; construction from either
// side derives the other.  Immutable after construction.
class ComplexField {
public:
    static ComplexField from_samples(const Grid& g, std::vector<cplx> samples);
    static ComplexField from_spectrum(const Grid& g, std::vector<cplx> spectrum);
    static ComplexField zero(const Grid& g);

    const Grid& grid() const { return grid_; }
    const std::vector<cplx>& values() const { return values_; }
    const std::vector<cplx>& spectrum() const { return spectrum_; }

    bool finite() const;
    double max_abs() const;
    // Largest |f| at the two outermost grid points, for decay checks
    // against the periodic truncation of the line.
    double boundary_abs() const;

private:
    ComplexField(Grid g, std::vector<cplx> v, std::vector<cplx> s)
        : grid_(g), values_(std::move(v)), spectrum_(std::move(s)) {}
    Grid grid_;
    std::vector<cplx> values_;
    std::vector<cplx> spectrum_;
};

// Real-valued component (the long wave).  Same storage scheme; the spectrum
// is Hermitian, u(-xi) = conj(u(xi)), up to roundoff.
class RealField {
public:
    static RealField from_samples(const Grid& g, std::vector<double> samples);
    // Synthesizes physical samples and drops the imaginary residue; the
    // caller can inspect it via the second overload.
    static RealField from_spectrum(const Grid& g, const std::vector<cplx>& spectrum);
    static RealField from_spectrum(const Grid& g, const std::vector<cplx>& spectrum,
                                   double* imag_residue);
    static RealField zero(const Grid& g);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<cplx>& spectrum() const { return spectrum_; }

    ComplexField as_complex() const;
    bool finite() const;
    double max_abs() const;
    double boundary_abs() const;
    // max_k |spec(-xi) - conj(spec(xi))| relative to the spectrum peak.
    double hermitian_residue() const;

private:
    RealField(Grid g, std::vector<double> v, std::vector<cplx> s)
        : grid_(g), values_(std::move(v)), spectrum_(std::move(s)) {}
    Grid grid_;
    std::vector<double> values_;
    std::vector<cplx> spectrum_;
};

// Discrete H^s norm, (sum_k <xi_k>^{2s} |u(xi_k)|^2 / (2L))^{1/2}.
// Throws InvalidInputError on non-finite samples.
double sobolev_norm(const ComplexField& f, double s);
double sobolev_norm(const RealField& f, double s);

// Physical-space quadrature norms (sum |f|^p dx)^{1/p}.
double lp_norm(const ComplexField& f, double p);
double lp_norm(const RealField& f, double p);
double l2_norm(const ComplexField& f);
double l2_norm(const RealField& f);

// Spectral d/dx; the Nyquist mode is zeroed.
ComplexField dx_derivative(const ComplexField& f);
RealField dx_derivative(const RealField& f);

// Japanese bracket <x> = (1 + x^2)^{1/2}.
inline double jbracket(double x) { return std::sqrt(1.0 + x * x); }

// Zero all modes with |k| > nx/3 (2/3 rule), plus the Nyquist mode,
// in a signed-order spectrum.
void dealias_23(std::vector<cplx>& spectrum);

} // namespace skdv
