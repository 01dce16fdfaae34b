#include "skdv/duhamel.hpp"

#include "skdv/errors.hpp"
#include "skdv/propagators.hpp"
#include "skdv/quadrature.hpp"
#include "skdv/window.hpp"

#include <cmath>

namespace skdv {

namespace {

void check_delta(const SpaceTimeField& f, double delta, double dt) {
    if (!(delta > 0.0))
        throw InvalidInputError("delta must be positive");
    if (delta > f.t_half() / 2.0 + 1e-12)
        throw WindowError("delta exceeds a quarter of the time window");
    if (delta / dt < 16.0 - 1e-9)
        throw ResolutionError("fewer than 16 lattice points over [0, delta]");
}

// Windowed free evolution psi(t) U_phi(t) f0 sampled on the lattice.
SpaceTimeField windowed_free_wave(const std::vector<cplx>& f0_hat, const Grid& g,
                                  int nt, double dt, Dispersion d) {
    std::vector<cplx> vals(size_t(g.nx()) * nt);
    const double T = nt * dt / 2.0;
    std::vector<cplx> spec(g.nx());
    for (int m = 0; m < nt; ++m) {
        const double t = -T + m * dt;
        const double w = bump_window(t);
        if (w == 0.0) {
            for (int j = 0; j < g.nx(); ++j)
                vals[size_t(m) * g.nx() + j] = 0.0;
            continue;
        }
        for (int i = 0; i < g.nx(); ++i) {
            const double a = -t * dispersion_phi(d, g.xi(i));
            spec[i] = f0_hat[i] * cplx(std::cos(a), std::sin(a));
        }
        auto phys = fft::centered_inverse(spec, g.dx());
        for (int j = 0; j < g.nx(); ++j)
            vals[size_t(m) * g.nx() + j] = w * phys[j];
    }
    return SpaceTimeField(g, nt, dt, std::move(vals));
}

} // namespace

PicardIterate initial_iterate(const ComplexField& u0, const RealField& v0, int nt,
                              double dt, double delta) {
    if (u0.grid() != v0.grid())
        throw InvalidInputError("data fields live on different grids");
    const Grid& g = u0.grid();
    SpaceTimeField u = windowed_free_wave(u0.spectrum(), g, nt, dt,
                                          Dispersion::Schrodinger);
    check_delta(u, delta, dt);
    SpaceTimeField v = windowed_free_wave(v0.spectrum(), g, nt, dt, Dispersion::Airy);
    return PicardIterate{std::move(u), std::move(v), delta, 0};
}

PicardIterate picard_map(const PicardIterate& it, const ComplexField& u0,
                         const RealField& v0, const SystemParams& p, double delta) {
    const Grid& g = it.u.grid();
    if (u0.grid() != g || v0.grid() != g)
        throw InvalidInputError("iterate and data live on different grids");
    const int nx = g.nx();
    const int nt = it.u.nt();
    const double dt = it.u.dt();
    check_delta(it.u, delta, dt);

    // Cut-off nonlinearities on the lattice, in spectral form per slice.
    std::vector<cplx> Gu(size_t(nt) * nx, 0.0), Gv(size_t(nt) * nx, 0.0);
    for (int m = 0; m < nt; ++m) {
        const double cut = bump_window(it.u.t(m), delta);
        if (cut == 0.0)
            continue;
        const auto us = it.u.slice(m);
        const auto vs = it.v.slice(m);
        std::vector<cplx> w_u(nx), w_v(nx);
        for (int j = 0; j < nx; ++j) {
            const double u2 = std::norm(us[j]);
            w_u[j] = p.alpha * us[j] * vs[j] + p.beta * u2 * us[j];
            w_v[j] = p.gamma * u2 - 0.5 * vs[j] * vs[j];
        }
        auto wu_hat = fft::centered_forward(w_u, g.dx());
        auto wv_hat = fft::centered_forward(w_v, g.dx());
        dealias_23(wu_hat);
        dealias_23(wv_hat);
        for (int i = 0; i < nx; ++i) {
            Gu[size_t(m) * nx + i] = cut * wu_hat[i];
            Gv[size_t(m) * nx + i] = cut * cplx(0.0, g.xi(i)) * wv_hat[i];
        }
    }

    // Duhamel integrals: per mode, cumulative integral of the phase-shifted
    // integrand, re-based at t = 0 (lattice index nt/2).
    const int m0 = nt / 2;
    std::vector<cplx> Cu(size_t(nt) * nx), Cv(size_t(nt) * nx);
    std::vector<cplx> col(nt);
    for (int i = 0; i < nx; ++i) {
        const double xi = g.xi(i);
        const double phi_s = dispersion_phi(Dispersion::Schrodinger, xi);
        const double phi_w = dispersion_phi(Dispersion::Airy, xi);
        for (int m = 0; m < nt; ++m) {
            const double a = it.u.t(m) * phi_s;
            col[m] = Gu[size_t(m) * nx + i] * cplx(std::cos(a), std::sin(a));
        }
        auto cum = cumulative_integral(col, dt);
        for (int m = 0; m < nt; ++m)
            Cu[size_t(m) * nx + i] = cum[m] - cum[m0];
        for (int m = 0; m < nt; ++m) {
            const double a = it.u.t(m) * phi_w;
            col[m] = Gv[size_t(m) * nx + i] * cplx(std::cos(a), std::sin(a));
        }
        cum = cumulative_integral(col, dt);
        for (int m = 0; m < nt; ++m)
            Cv[size_t(m) * nx + i] = cum[m] - cum[m0];
    }

    // Assemble psi(t) [ U(t) f0 + U(t) * integral ] slice by slice.
    std::vector<cplx> u_vals(size_t(nt) * nx), v_vals(size_t(nt) * nx);
    const auto& u0_hat = u0.spectrum();
    const auto& v0_hat = v0.spectrum();
    std::vector<cplx> spec_u(nx), spec_v(nx);
    const cplx mi(0.0, -1.0);
    for (int m = 0; m < nt; ++m) {
        const double t = it.u.t(m);
        const double w = bump_window(t);
        if (w == 0.0) {
            for (int j = 0; j < nx; ++j) {
                u_vals[size_t(m) * nx + j] = 0.0;
                v_vals[size_t(m) * nx + j] = 0.0;
            }
            continue;
        }
        for (int i = 0; i < nx; ++i) {
            const double xi = g.xi(i);
            const double as = -t * dispersion_phi(Dispersion::Schrodinger, xi);
            const double aw = -t * dispersion_phi(Dispersion::Airy, xi);
            const cplx es(std::cos(as), std::sin(as));
            const cplx ew(std::cos(aw), std::sin(aw));
            spec_u[i] = w * es * (u0_hat[i] + mi * Cu[size_t(m) * nx + i]);
            spec_v[i] = w * ew * (v0_hat[i] + Cv[size_t(m) * nx + i]);
        }
        auto up = fft::centered_inverse(spec_u, g.dx());
        auto vp = fft::centered_inverse(spec_v, g.dx());
        for (int j = 0; j < nx; ++j) {
            u_vals[size_t(m) * nx + j] = up[j];
            v_vals[size_t(m) * nx + j] = vp[j];
        }
    }

    return PicardIterate{SpaceTimeField(g, nt, dt, std::move(u_vals)),
                         SpaceTimeField(g, nt, dt, std::move(v_vals)), delta,
                         it.k + 1};
}

double sup_difference(const PicardIterate& a, const PicardIterate& b) {
    double du = 0.0, dv = 0.0;
    for (size_t i = 0; i < a.u.values().size(); ++i)
        du = std::max(du, std::abs(a.u.values()[i] - b.u.values()[i]));
    for (size_t i = 0; i < a.v.values().size(); ++i)
        dv = std::max(dv, std::abs(a.v.values()[i] - b.v.values()[i]));
    return std::max(du, dv);
}

ContractionProbe picard_contraction_probe(const ComplexField& u0_base,
                                          const RealField& v0_base,
                                          const SystemParams& p,
                                          const std::vector<double>& delta_list,
                                          const std::vector<double>& amplitudes,
                                          int nt, double dt, int iterations) {
    const Grid& g = u0_base.grid();
    ContractionProbe probe;

    for (double amp : amplitudes) {
        std::vector<cplx> us = u0_base.spectrum();
        std::vector<cplx> vs = v0_base.spectrum();
        for (auto& z : us)
            z *= amp;
        for (auto& z : vs)
            z *= amp;
        const ComplexField u0 = ComplexField::from_spectrum(g, us);
        const RealField v0 = RealField::from_spectrum(g, vs);

        ContractionProbe::Star star;
        star.amplitude = amp;
        for (double delta : delta_list) {
            ContractionCell cell;
            cell.amplitude = amp;
            cell.delta = delta;
            try {
                PicardIterate prev = initial_iterate(u0, v0, nt, dt, delta);
                const double tiny = 1e-12 * (1.0 + amp);
                double d_prev = -1.0;
                bool ok = true;
                bool settled = false;
                double last_ratio = 0.0;
                for (int k = 0; k < iterations; ++k) {
                    PicardIterate next = picard_map(prev, u0, v0, p, delta);
                    if (!next.u.finite() || !next.v.finite()) {
                        ok = false;
                        break;
                    }
                    const double d = sup_difference(next, prev);
                    if (d_prev >= 0.0) {
                        last_ratio = (d_prev > 0.0) ? d / d_prev : 0.0;
                        if (d > d_prev && d > tiny)
                            ok = false;
                    }
                    d_prev = d;
                    prev = std::move(next);
                    if (d <= tiny) { // converged to lattice precision
                        settled = true;
                        break;
                    }
                }
                cell.final_ratio = last_ratio;
                cell.contracted = ok && (settled || last_ratio < 1.0);
            } catch (const Error&) {
                cell.contracted = false;
            }
            probe.cells.push_back(cell);
            if (cell.contracted && cell.delta > star.delta_star) {
                star.delta_star = cell.delta;
                star.found = true;
            }
        }
        probe.stars.push_back(star);
    }

    std::vector<std::pair<double, double>> pts;
    for (const auto& star : probe.stars)
        if (star.found)
            pts.emplace_back(star.amplitude, star.delta_star);
    probe.conclusive = !pts.empty();
    if (pts.size() >= 3) {
        try {
            probe.power = fit_loglog(pts);
        } catch (const FitError&) {
            probe.power.reset();
        }
    }
    return probe;
}

} // namespace skdv
