#include "skdv/spacetime.hpp"

#include "skdv/errors.hpp"
#include "skdv/window.hpp"

#include <cmath>

namespace skdv {

double dispersion_phi(Dispersion d, double xi) {
    switch (d) {
    case Dispersion::Schrodinger:
        return xi * xi;
    case Dispersion::SchrodingerConj:
        return -xi * xi;
    case Dispersion::Airy:
        return -xi * xi * xi;
    }
    return 0.0;
}

SpaceTimeField::SpaceTimeField(const Grid& g, int nt, double dt, std::vector<cplx> values)
    : grid_(g), nt_(nt), dt_(dt) {
    if (nt < 8 || !is_power_of_two(nt))
        throw ResolutionError("time sample count must be a power of two >= 8");
    if (!(dt > 0.0))
        throw InvalidInputError("time spacing must be positive");
    if (values.size() != size_t(g.nx()) * nt)
        throw InvalidInputError("space-time sample block has wrong size");
    t_half_ = nt_ * dt_ / 2.0;
    values_ = std::move(values);
}

SpaceTimeField SpaceTimeField::zero(const Grid& g, int nt, double dt) {
    return SpaceTimeField(g, nt, dt, std::vector<cplx>(size_t(g.nx()) * nt, 0.0));
}

SpaceTimeField SpaceTimeField::sample(const Grid& g, int nt, double dt,
                                      const std::function<cplx(double, double)>& fn) {
    std::vector<cplx> vals(size_t(g.nx()) * nt);
    const double T = nt * dt / 2.0;
    for (int m = 0; m < nt; ++m) {
        const double t = -T + dt * m;
        for (int j = 0; j < g.nx(); ++j)
            vals[size_t(m) * g.nx() + j] = fn(g.x(j), t);
    }
    return SpaceTimeField(g, nt, dt, std::move(vals));
}

std::vector<cplx> SpaceTimeField::slice(int it) const {
    const int nx = grid_.nx();
    return std::vector<cplx>(values_.begin() + size_t(it) * nx,
                             values_.begin() + size_t(it + 1) * nx);
}

SpaceTimeSpectrum SpaceTimeField::spectrum(int pad_factor) const {
    if (pad_factor < 1)
        throw InvalidInputError("pad factor must be >= 1");
    const int nx = grid_.nx();
    const int ntq = nt_ * pad_factor;
    const int offset = (ntq - nt_) / 2; // data centered in the padded window

    SpaceTimeSpectrum out;
    out.nx = nx;
    out.ntq = ntq;
    out.dx = grid_.dx();
    out.dt = dt_;
    out.Lbox = grid_.half_length();
    out.Thalf = ntq * dt_ / 2.0;
    out.data.assign(size_t(nx) * ntq, 0.0);

    // Transform in x slice by slice, writing into the padded block.
    for (int m = 0; m < nt_; ++m) {
        auto row = fft::centered_forward(slice(m), grid_.dx());
        for (int i = 0; i < nx; ++i)
            out.data[size_t(m + offset) * nx + i] = row[i];
    }
    // Transform each mode column in t.
    std::vector<cplx> col(ntq);
    for (int i = 0; i < nx; ++i) {
        for (int q = 0; q < ntq; ++q)
            col[q] = out.data[size_t(q) * nx + i];
        auto chat = fft::centered_forward(col, dt_);
        for (int q = 0; q < ntq; ++q)
            out.data[size_t(q) * nx + i] = chat[q];
    }
    return out;
}

double SpaceTimeField::max_abs() const {
    double m = 0.0;
    for (const auto& z : values_)
        m = std::max(m, std::abs(z));
    return m;
}

bool SpaceTimeField::finite() const {
    for (const auto& z : values_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

namespace {

void check_compatible(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.grid() != b.grid() || a.nt() != b.nt() || a.dt() != b.dt())
        throw InvalidInputError("space-time fields live on different lattices");
}

SpaceTimeField map_slices(const SpaceTimeField& f,
                          const std::function<void(std::vector<cplx>&)>& spectral_op) {
    const Grid& g = f.grid();
    std::vector<cplx> vals(size_t(g.nx()) * f.nt());
    for (int m = 0; m < f.nt(); ++m) {
        auto spec = fft::centered_forward(f.slice(m), g.dx());
        spectral_op(spec);
        auto phys = fft::centered_inverse(spec, g.dx());
        for (int j = 0; j < g.nx(); ++j)
            vals[size_t(m) * g.nx() + j] = phys[j];
    }
    return SpaceTimeField(g, f.nt(), f.dt(), std::move(vals));
}

} // namespace

SpaceTimeField spacetime_product(const SpaceTimeField& a, const SpaceTimeField& b,
                                 bool conjugate_b, bool dealias) {
    check_compatible(a, b);
    const int nx = a.grid().nx();
    std::vector<cplx> vals(size_t(nx) * a.nt());
    for (size_t i = 0; i < vals.size(); ++i) {
        const cplx bb = conjugate_b ? std::conj(b.values()[i]) : b.values()[i];
        vals[i] = a.values()[i] * bb;
    }
    SpaceTimeField prod(a.grid(), a.nt(), a.dt(), std::move(vals));
    if (!dealias)
        return prod;
    return map_slices(prod, [](std::vector<cplx>& spec) { dealias_23(spec); });
}

SpaceTimeField spacetime_triple_product(const SpaceTimeField& a,
                                        const SpaceTimeField& b,
                                        const SpaceTimeField& c,
                                        bool dealias) {
    check_compatible(a, b);
    check_compatible(a, c);
    const int nx = a.grid().nx();
    std::vector<cplx> vals(size_t(nx) * a.nt());
    for (size_t i = 0; i < vals.size(); ++i)
        vals[i] = a.values()[i] * b.values()[i] * std::conj(c.values()[i]);
    SpaceTimeField prod(a.grid(), a.nt(), a.dt(), std::move(vals));
    if (!dealias)
        return prod;
    return map_slices(prod, [](std::vector<cplx>& spec) { dealias_23(spec); });
}

SpaceTimeField spacetime_dx(const SpaceTimeField& f) {
    const Grid& g = f.grid();
    return map_slices(f, [&g](std::vector<cplx>& spec) {
        for (int i = 0; i < g.nx(); ++i)
            spec[i] *= cplx(0.0, g.xi(i));
        spec[g.nyquist_index()] = 0.0;
    });
}

SpaceTimeField apply_window(const SpaceTimeField& f, double delta) {
    if (!(delta > 0.0))
        throw WindowError("window scale must be positive");
    if (2.0 * delta > f.t_half() + 1e-12)
        throw WindowError("window support [-2d, 2d] exceeds the stored time window");
    const int nx = f.grid().nx();
    std::vector<cplx> vals(f.values());
    for (int m = 0; m < f.nt(); ++m) {
        const double w = bump_window(f.t(m), delta);
        for (int j = 0; j < nx; ++j)
            vals[size_t(m) * nx + j] *= w;
    }
    return SpaceTimeField(f.grid(), f.nt(), f.dt(), std::move(vals));
}

double xsb_norm(const SpaceTimeField& f, const NormSpec& spec, int pad_factor) {
    if (f.nt() < 8)
        throw ResolutionError("xsb_norm: nt < 8");
    if (!f.finite())
        throw InvalidInputError("xsb_norm: non-finite samples");
    const SpaceTimeSpectrum F = f.spectrum(pad_factor);
    double acc = 0.0;
    for (int i = 0; i < F.nx; ++i) {
        const double xi = F.xi(i);
        const double wxi = std::pow(1.0 + xi * xi, spec.s);
        const double phi = dispersion_phi(spec.dispersion, xi);
        for (int q = 0; q < F.ntq; ++q) {
            const double sigma = F.tau(q) + phi;
            const double wmod = std::pow(1.0 + sigma * sigma, spec.b);
            acc += wxi * wmod * std::norm(F.at(i, q));
        }
    }
    return std::sqrt(acc / (2.0 * F.Lbox * 2.0 * F.Thalf));
}

} // namespace skdv
