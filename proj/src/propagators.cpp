#include "skdv/propagators.hpp"

#include "skdv/errors.hpp"

#include <cmath>
#include <cstdio>

namespace skdv {

namespace {

std::vector<cplx> phase_factors(const Grid& g, double t, Dispersion d) {
    std::vector<cplx> ph(g.nx());
    for (int i = 0; i < g.nx(); ++i) {
        const double a = -t * dispersion_phi(d, g.xi(i));
        ph[i] = cplx(std::cos(a), std::sin(a));
    }
    return ph;
}

struct SpectralPair {
    std::vector<cplx> u;
    std::vector<cplx> v;
};

// Nonlinearities in the lab frame, evaluated from spectra.
SpectralPair nonlinear_hat(const std::vector<cplx>& uhat, const std::vector<cplx>& vhat,
                           const Grid& g, const SystemParams& p, bool dealias) {
    const int nx = g.nx();
    auto u = fft::centered_inverse(uhat, g.dx());
    auto v = fft::centered_inverse(vhat, g.dx());

    std::vector<cplx> w_uv(nx), w_cub(nx), w_vv(nx), w_uu(nx);
    for (int j = 0; j < nx; ++j) {
        const double u2 = std::norm(u[j]);
        w_uv[j] = u[j] * v[j];
        w_cub[j] = u2 * u[j];
        w_vv[j] = v[j] * v[j];
        w_uu[j] = u2;
    }

    auto uv_hat = fft::centered_forward(w_uv, g.dx());
    auto cub_hat = fft::centered_forward(w_cub, g.dx());
    auto vv_hat = fft::centered_forward(w_vv, g.dx());
    auto uu_hat = fft::centered_forward(w_uu, g.dx());

    SpectralPair out;
    out.u.resize(nx);
    out.v.resize(nx);
    const cplx mi(0.0, -1.0);
    for (int i = 0; i < nx; ++i) {
        out.u[i] = mi * (p.alpha * uv_hat[i] + p.beta * cub_hat[i]);
        out.v[i] = cplx(0.0, g.xi(i)) * (p.gamma * uu_hat[i] - 0.5 * vv_hat[i]);
    }
    out.v[g.nyquist_index()] = 0.0;
    if (dealias) {
        dealias_23(out.u);
        dealias_23(out.v);
    }
    return out;
}

struct StepResult {
    std::vector<cplx> uhat;
    std::vector<cplx> vhat;
    double v_imag_residue = 0.0;
};

StepResult rk4_step(const std::vector<cplx>& uhat0, const std::vector<cplx>& vhat0,
                    const Grid& g, double h, const SystemParams& p, bool dealias) {
    const int nx = g.nx();
    const auto eu_h = phase_factors(g, h, Dispersion::Schrodinger);
    const auto ev_h = phase_factors(g, h, Dispersion::Airy);
    const auto eu_h2 = phase_factors(g, h / 2.0, Dispersion::Schrodinger);
    const auto ev_h2 = phase_factors(g, h / 2.0, Dispersion::Airy);

    // RHS of the interaction-frame variables at offset tau from step start:
    // dA/dtau = conj(EU(tau)) .* N_u(EU(tau) A, EV(tau) B), likewise for B.
    auto rhs = [&](const std::vector<cplx>& A, const std::vector<cplx>& B,
                   const std::vector<cplx>* eu, const std::vector<cplx>* ev) {
        std::vector<cplx> ulab(nx), vlab(nx);
        for (int i = 0; i < nx; ++i) {
            ulab[i] = eu ? (*eu)[i] * A[i] : A[i];
            vlab[i] = ev ? (*ev)[i] * B[i] : B[i];
        }
        SpectralPair n = nonlinear_hat(ulab, vlab, g, p, dealias);
        if (eu)
            for (int i = 0; i < nx; ++i) {
                n.u[i] *= std::conj((*eu)[i]);
                n.v[i] *= std::conj((*ev)[i]);
            }
        return n;
    };

    auto axpy = [nx](const std::vector<cplx>& a, double c, const std::vector<cplx>& b) {
        std::vector<cplx> r(nx);
        for (int i = 0; i < nx; ++i)
            r[i] = a[i] + c * b[i];
        return r;
    };

    const SpectralPair k1 = rhs(uhat0, vhat0, nullptr, nullptr);
    const SpectralPair k2 =
        rhs(axpy(uhat0, h / 2.0, k1.u), axpy(vhat0, h / 2.0, k1.v), &eu_h2, &ev_h2);
    const SpectralPair k3 =
        rhs(axpy(uhat0, h / 2.0, k2.u), axpy(vhat0, h / 2.0, k2.v), &eu_h2, &ev_h2);
    const SpectralPair k4 =
        rhs(axpy(uhat0, h, k3.u), axpy(vhat0, h, k3.v), &eu_h, &ev_h);

    StepResult res;
    res.uhat.resize(nx);
    res.vhat.resize(nx);
    for (int i = 0; i < nx; ++i) {
        const cplx du = (k1.u[i] + 2.0 * k2.u[i] + 2.0 * k3.u[i] + k4.u[i]) * (h / 6.0);
        const cplx dv = (k1.v[i] + 2.0 * k2.v[i] + 2.0 * k3.v[i] + k4.v[i]) * (h / 6.0);
        res.uhat[i] = eu_h[i] * (uhat0[i] + du);
        res.vhat[i] = ev_h[i] * (vhat0[i] + dv);
    }
    res.vhat[g.nyquist_index()] = 0.0;
    return res;
}

SystemState assemble_state(const Grid& g, StepResult&& r, double t_new) {
    ComplexField u = ComplexField::from_spectrum(g, std::move(r.uhat));
    double resid = 0.0;
    RealField v = RealField::from_spectrum(g, r.vhat, &resid);
    if (!u.finite() || !v.finite() || u.max_abs() > 1e12 || v.max_abs() > 1e12)
        throw BlowupError("solution blew up", t_new);
    SystemState s{std::move(u), std::move(v), t_new};
    return s;
}

} // namespace

ComplexField linear_propagate(const ComplexField& f, double t, Dispersion d) {
    const Grid& g = f.grid();
    auto spec = f.spectrum();
    const auto ph = phase_factors(g, t, d);
    for (int i = 0; i < g.nx(); ++i)
        spec[i] *= ph[i];
    return ComplexField::from_spectrum(g, std::move(spec));
}

RealField linear_propagate(const RealField& f, double t, Dispersion d) {
    const Grid& g = f.grid();
    auto spec = f.spectrum();
    const auto ph = phase_factors(g, t, d);
    for (int i = 0; i < g.nx(); ++i)
        spec[i] *= ph[i];
    spec[g.nyquist_index()] = 0.0;
    return RealField::from_spectrum(g, spec);
}

SystemState step(const SystemState& state, const SolverConfig& cfg,
                 const SystemParams& p) {
    if (state.u.grid() != state.v.grid())
        throw InvalidInputError("u and v must share one grid");
    if (!(cfg.dt > 0.0))
        throw InvalidInputError("dt must be positive");
    const Grid& g = state.u.grid();
    StepResult r = rk4_step(state.u.spectrum(), state.v.spectrum(), g, cfg.dt, p,
                            cfg.dealias);
    return assemble_state(g, std::move(r), state.t + cfg.dt);
}

Trajectory evolve(const SystemState& initial, double T, const SolverConfig& cfg,
                  const SystemParams& p, const std::vector<Observer>& observers) {
    if (!(T >= 0.0))
        throw InvalidInputError("horizon must be non-negative");
    if (!p.finite())
        throw InvalidInputError("non-finite system parameters");
    const Grid& g = initial.u.grid();

    Trajectory traj;
    for (const auto& o : observers) {
        traj.observer_names.push_back(o.name);
        traj.observer_values.emplace_back();
    }
    const double xi3 = std::pow(g.xi_max(), 3);
    if (cfg.dt * std::abs(xi3) > 50.0) {
        traj.dt_stability_warning = true;
        std::fprintf(stderr,
                     "warning: dt * max|xi|^3 = %.3g exceeds 50; nonlinear substep "
                     "accuracy may degrade\n",
                     cfg.dt * std::abs(xi3));
    }

    SystemState cur = initial;
    if (cfg.dealias) {
        auto us = cur.u.spectrum();
        auto vs = cur.v.spectrum();
        dealias_23(us);
        dealias_23(vs);
        cur = SystemState{ComplexField::from_spectrum(g, std::move(us)),
                          RealField::from_spectrum(g, vs), cur.t};
    }

    auto record = [&](const SystemState& s) {
        traj.times.push_back(s.t);
        traj.states.push_back(s);
        for (size_t i = 0; i < observers.size(); ++i)
            traj.observer_values[i].push_back(observers[i].fn(s));
    };
    record(cur);

    const double t_end = initial.t + T;
    long step_count = 0;
    const int every = std::max(1, cfg.record_every);
    while (cur.t < t_end - 1e-15 * std::max(1.0, std::abs(t_end))) {
        const double h = std::min(cfg.dt, t_end - cur.t);
        double resid = 0.0;
        StepResult r = rk4_step(cur.u.spectrum(), cur.v.spectrum(), g, h, p,
                                cfg.dealias);
        ComplexField u = ComplexField::from_spectrum(g, std::move(r.uhat));
        RealField v = RealField::from_spectrum(g, r.vhat, &resid);
        traj.max_v_imag_residue = std::max(traj.max_v_imag_residue, resid);
        if (!u.finite() || !v.finite() || u.max_abs() > 1e12 || v.max_abs() > 1e12) {
            traj.blew_up = true;
            traj.t_blowup = cur.t + h;
            return traj;
        }
        cur = SystemState{std::move(u), std::move(v), cur.t + h};
        ++step_count;
        if (step_count % every == 0 ||
            cur.t >= t_end - 1e-15 * std::max(1.0, std::abs(t_end)))
            record(cur);
    }
    return traj;
}

} // namespace skdv
