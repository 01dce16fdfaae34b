#pragma once

#include "skdv/field.hpp"
#include "skdv/grid.hpp"

#include <functional>

namespace skdv {

enum class Dispersion {
    Schrodinger,     // phi(xi) = xi^2
    SchrodingerConj, // phi(xi) = -xi^2
    Airy,            // phi(xi) = -xi^3
};

double dispersion_phi(Dispersion d, double xi);

// Space-time norm parameters: <xi>^s in frequency, <tau + phi(xi)>^b in
// modulation distance to the dispersion surface tau = -phi(xi).
struct NormSpec {
    double s = 0.0;
    double b = 0.0;
    Dispersion dispersion = Dispersion::Schrodinger;
};

// 2-D spectrum of a space-time sample block, signed order in both variables.
struct SpaceTimeSpectrum {
    int nx = 0;
    int ntq = 0; // padded time-mode count
    double dx = 0.0, dt = 0.0;
    double Lbox = 0.0;   // spatial half-length
    double Thalf = 0.0;  // padded temporal half-length = ntq*dt/2
    std::vector<cplx> data; // [iq * nx + ik]

    double xi(int ik) const { return M_PI * (ik - nx / 2) / Lbox; }
    double tau(int iq) const { return M_PI * (iq - ntq / 2) / Thalf; }
    const cplx& at(int ik, int iq) const { return data[size_t(iq) * nx + ik]; }
};

// Complex samples on grid x window: t_m = -T + m*dt, m = 0..nt-1, with
// T = nt*dt/2.  nt must be a power of two >= 8.  Value-semantic; operations
// return new fields.
class SpaceTimeField {
public:
    SpaceTimeField(const Grid& g, int nt, double dt, std::vector<cplx> values);
    static SpaceTimeField zero(const Grid& g, int nt, double dt);
    // Samples fn(x, t) over the block.
    static SpaceTimeField sample(const Grid& g, int nt, double dt,
                                 const std::function<cplx(double, double)>& fn);

    const Grid& grid() const { return grid_; }
    int nt() const { return nt_; }
    double dt() const { return dt_; }
    double t(int m) const { return -t_half_ + dt_ * m; }
    double t_half() const { return t_half_; }
    const std::vector<cplx>& values() const { return values_; }
    cplx at(int ix, int it) const { return values_[size_t(it) * grid_.nx() + ix]; }

    // Physical samples at one time slice.
    std::vector<cplx> slice(int it) const;
    // Index of the t = 0 slice.
    int zero_index() const { return nt_ / 2; }

    // Full 2-D Riemann-sum transform; the time axis is zero-padded by
    // pad_factor (>= 1) before transforming so modulation weights are
    // resolved on a finer tau lattice.
    SpaceTimeSpectrum spectrum(int pad_factor = 4) const;

    double max_abs() const;
    bool finite() const;

private:
    Grid grid_;
    int nt_;
    double dt_;
    double t_half_;
    std::vector<cplx> values_;
};

// Pointwise product (optionally conjugating b), 2/3-dealiased in x per slice.
SpaceTimeField spacetime_product(const SpaceTimeField& a, const SpaceTimeField& b,
                                 bool conjugate_b = false, bool dealias = true);
// Triple product a * b * conj(c), dealiased in x per slice.
SpaceTimeField spacetime_triple_product(const SpaceTimeField& a,
                                        const SpaceTimeField& b,
                                        const SpaceTimeField& c,
                                        bool dealias = true);
// Spectral d/dx slice by slice; Nyquist zeroed.
SpaceTimeField spacetime_dx(const SpaceTimeField& f);

// Multiply samples by the bump window at scale delta.  Throws WindowError
// when the support [-2*delta, 2*delta] does not fit in the stored window.
SpaceTimeField apply_window(const SpaceTimeField& f, double delta);

// Discrete X_{s,b}(phi) norm of an (already windowed) block:
// (sum <xi>^{2s} <tau + phi(xi)>^{2b} |F(xi,tau)|^2 / (2L * 2T))^{1/2}.
// With s = b = 0 this is the space-time L^2 quadrature norm.
double xsb_norm(const SpaceTimeField& f, const NormSpec& spec, int pad_factor = 4);

} // namespace skdv
