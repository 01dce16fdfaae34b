#include "skdv/field.hpp"

#include "skdv/errors.hpp"

#include <algorithm>
#include <cmath>

namespace skdv {

namespace {

bool all_finite(const std::vector<cplx>& v) {
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

void check_size(const Grid& g, size_t n, const char* what) {
    if (static_cast<int>(n) != g.nx())
        throw InvalidInputError(std::string(what) + ": sample count does not match grid");
}

} // namespace

ComplexField ComplexField::from_samples(const Grid& g, std::vector<cplx> samples) {
    check_size(g, samples.size(), "ComplexField");
    auto spec = fft::centered_forward(samples, g.dx());
    return ComplexField(g, std::move(samples), std::move(spec));
}

ComplexField ComplexField::from_spectrum(const Grid& g, std::vector<cplx> spectrum) {
    check_size(g, spectrum.size(), "ComplexField");
    auto vals = fft::centered_inverse(spectrum, g.dx());
    return ComplexField(g, std::move(vals), std::move(spectrum));
}

ComplexField ComplexField::zero(const Grid& g) {
    return ComplexField(g, std::vector<cplx>(g.nx(), 0.0),
                        std::vector<cplx>(g.nx(), 0.0));
}

bool ComplexField::finite() const { return all_finite(values_); }

double ComplexField::max_abs() const {
    double m = 0.0;
    for (const auto& z : values_)
        m = std::max(m, std::abs(z));
    return m;
}

double ComplexField::boundary_abs() const {
    return std::max(std::abs(values_.front()), std::abs(values_.back()));
}

RealField RealField::from_samples(const Grid& g, std::vector<double> samples) {
    check_size(g, samples.size(), "RealField");
    std::vector<cplx> tmp(samples.begin(), samples.end());
    auto spec = fft::centered_forward(tmp, g.dx());
    return RealField(g, std::move(samples), std::move(spec));
}

RealField RealField::from_spectrum(const Grid& g, const std::vector<cplx>& spectrum) {
    return from_spectrum(g, spectrum, nullptr);
}

RealField RealField::from_spectrum(const Grid& g, const std::vector<cplx>& spectrum,
                                   double* imag_residue) {
    check_size(g, spectrum.size(), "RealField");
    auto synth = fft::centered_inverse(spectrum, g.dx());
    double resid = 0.0;
    std::vector<double> vals(g.nx());
    for (int j = 0; j < g.nx(); ++j) {
        vals[j] = synth[j].real();
        resid = std::max(resid, std::abs(synth[j].imag()));
    }
    if (imag_residue)
        *imag_residue = resid;
    return RealField(g, std::move(vals), spectrum);
}

RealField RealField::zero(const Grid& g) {
    return RealField(g, std::vector<double>(g.nx(), 0.0),
                     std::vector<cplx>(g.nx(), 0.0));
}

ComplexField RealField::as_complex() const {
    std::vector<cplx> v(values_.begin(), values_.end());
    return ComplexField::from_samples(grid_, std::move(v));
}

bool RealField::finite() const {
    for (double x : values_)
        if (!std::isfinite(x))
            return false;
    return true;
}

double RealField::max_abs() const {
    double m = 0.0;
    for (double x : values_)
        m = std::max(m, std::abs(x));
    return m;
}

double RealField::boundary_abs() const {
    return std::max(std::abs(values_.front()), std::abs(values_.back()));
}

double RealField::hermitian_residue() const {
    const int n = grid_.nx();
    double peak = 0.0;
    for (const auto& z : spectrum_)
        peak = std::max(peak, std::abs(z));
    if (peak == 0.0)
        return 0.0;
    double worst = 0.0;
    // Index i holds mode k = i - n/2; the partner of k is -k at n - i.
    for (int i = 1; i < n; ++i) {
        const int ipartner = n - i;
        if (ipartner >= n)
            continue;
        worst = std::max(worst, std::abs(spectrum_[i] - std::conj(spectrum_[ipartner])));
    }
    return worst / peak;
}

namespace {

double sobolev_norm_impl(const std::vector<cplx>& spec, const Grid& g, double s) {
    double acc = 0.0;
    for (int i = 0; i < g.nx(); ++i) {
        const double w = std::pow(1.0 + g.xi(i) * g.xi(i), s);
        acc += w * std::norm(spec[i]);
    }
    return std::sqrt(acc / g.length());
}

} // namespace

double sobolev_norm(const ComplexField& f, double s) {
    if (!f.finite())
        throw InvalidInputError("sobolev_norm: non-finite samples");
    return sobolev_norm_impl(f.spectrum(), f.grid(), s);
}

double sobolev_norm(const RealField& f, double s) {
    if (!f.finite())
        throw InvalidInputError("sobolev_norm: non-finite samples");
    return sobolev_norm_impl(f.spectrum(), f.grid(), s);
}

double lp_norm(const ComplexField& f, double p) {
    double acc = 0.0;
    for (const auto& z : f.values())
        acc += std::pow(std::abs(z), p);
    return std::pow(acc * f.grid().dx(), 1.0 / p);
}

double lp_norm(const RealField& f, double p) {
    double acc = 0.0;
    for (double x : f.values())
        acc += std::pow(std::abs(x), p);
    return std::pow(acc * f.grid().dx(), 1.0 / p);
}

double l2_norm(const ComplexField& f) { return lp_norm(f, 2.0); }
double l2_norm(const RealField& f) { return lp_norm(f, 2.0); }

ComplexField dx_derivative(const ComplexField& f) {
    const Grid& g = f.grid();
    std::vector<cplx> spec = f.spectrum();
    for (int i = 0; i < g.nx(); ++i)
        spec[i] *= cplx(0.0, g.xi(i));
    spec[g.nyquist_index()] = 0.0;
    return ComplexField::from_spectrum(g, std::move(spec));
}

RealField dx_derivative(const RealField& f) {
    const Grid& g = f.grid();
    std::vector<cplx> spec = f.spectrum();
    for (int i = 0; i < g.nx(); ++i)
        spec[i] *= cplx(0.0, g.xi(i));
    spec[g.nyquist_index()] = 0.0;
    return RealField::from_spectrum(g, spec);
}

void dealias_23(std::vector<cplx>& spectrum) {
    const int n = static_cast<int>(spectrum.size());
    const int kmax = n / 3;
    for (int i = 0; i < n; ++i) {
        const int k = i - n / 2;
        if (std::abs(k) > kmax)
            spectrum[i] = 0.0;
    }
    spectrum[0] = 0.0; // Nyquist
}

} // namespace skdv
