#include "skdv/invariants.hpp"

#include "skdv/errors.hpp"

#include <cmath>

namespace skdv {

namespace {

// Synthesize physical samples from the 2/3-truncated spectrum, for the
// odd-power integrands.
std::vector<cplx> dealiased_samples(const ComplexField& f) {
    auto spec = f.spectrum();
    dealias_23(spec);
    return fft::centered_inverse(spec, f.grid().dx());
}

std::vector<double> dealiased_samples(const RealField& f) {
    auto spec = f.spectrum();
    dealias_23(spec);
    auto synth = fft::centered_inverse(spec, f.grid().dx());
    std::vector<double> out(synth.size());
    for (size_t j = 0; j < synth.size(); ++j)
        out[j] = synth[j].real();
    return out;
}

} // namespace

double mass(const ComplexField& u) { return l2_norm(u); }

double functional_L(const ComplexField& u, const RealField& v,
                    const SystemParams& p, const MultiplierSpec& M) {
    if (u.grid() != v.grid())
        throw InvalidInputError("functional_L: u and v on different grids");
    const ComplexField Iu = apply_multiplier(u, M);
    const RealField Iv = apply_multiplier(v, M);
    const ComplexField dIu = dx_derivative(Iu);

    const double l2v = l2_norm(Iv);
    double momentum = 0.0;
    for (int j = 0; j < u.grid().nx(); ++j)
        momentum += std::imag(Iu.values()[j] * std::conj(dIu.values()[j]));
    momentum *= u.grid().dx();

    return p.alpha * l2v * l2v + 2.0 * p.gamma * momentum;
}

double functional_E(const ComplexField& u, const RealField& v,
                    const SystemParams& p, const MultiplierSpec& M,
                    EnergyVariant variant) {
    if (u.grid() != v.grid())
        throw InvalidInputError("functional_E: u and v on different grids");
    const Grid& g = u.grid();
    const double dx = g.dx();

    const ComplexField Iu = apply_multiplier(u, M);
    const RealField Iv = apply_multiplier(v, M);
    const ComplexField dIu = dx_derivative(Iu);
    const RealField dIv = dx_derivative(Iv);

    const auto us = dealiased_samples(Iu);
    const auto vs = dealiased_samples(Iv);

    double coupling = 0.0, cubic = 0.0, quartic = 0.0;
    for (int j = 0; j < g.nx(); ++j) {
        const double uu = std::norm(us[j]);
        coupling += vs[j] * uu;
        cubic += vs[j] * vs[j] * vs[j];
        quartic += (variant == EnergyVariant::QuarticV) ? vs[j] * vs[j] * vs[j] * vs[j]
                                                        : uu * uu;
    }
    coupling *= dx;
    cubic *= dx;
    quartic *= dx;

    const double grad_u = l2_norm(dIu);
    const double grad_v = l2_norm(dIv);

    return p.alpha * p.gamma * coupling + p.gamma * grad_u * grad_u +
           0.5 * p.alpha * grad_v * grad_v - p.alpha / 6.0 * cubic +
           0.5 * p.beta * p.gamma * quartic;
}

InterpBound interp_bound_check(const ComplexField& u, const RealField& v,
                               const SystemParams& p, const MultiplierSpec& M) {
    const ComplexField Iu = apply_multiplier(u, M);
    const RealField Iv = apply_multiplier(v, M);
    const double hu = sobolev_norm(Iu, 1.0);
    const double hv = sobolev_norm(Iv, 1.0);
    const double E = functional_E(u, v, p, M);
    const double L = functional_L(u, v, p, M);
    const double m = mass(apply_multiplier(u, M));
    InterpBound b;
    b.lhs = hu * hu + hv * hv;
    b.rhs = std::abs(E) + std::pow(std::abs(L), 5.0 / 3.0) + std::pow(m, 8.0) + 1.0;
    return b;
}

FunctionalReport evaluate_report(const Trajectory& traj, const SystemParams& p,
                                 const MultiplierSpec& M, EnergyVariant variant) {
    FunctionalReport rep;
    rep.N = M.N;
    for (size_t i = 0; i < traj.states.size(); ++i) {
        const SystemState& st = traj.states[i];
        rep.t.push_back(st.t);
        rep.M.push_back(mass(apply_multiplier(st.u, M)));
        rep.L.push_back(functional_L(st.u, st.v, p, M));
        rep.E.push_back(functional_E(st.u, st.v, p, M, variant));
    }
    rep.drift_L.resize(rep.L.size());
    rep.drift_E.resize(rep.E.size());
    for (size_t i = 0; i < rep.L.size(); ++i) {
        rep.drift_L[i] = std::abs(rep.L[i] - rep.L[0]);
        rep.drift_E[i] = std::abs(rep.E[i] - rep.E[0]);
    }
    return rep;
}

AlmostConservationResult almost_conservation_run(
    const ComplexField& u0, const RealField& v0, const SystemParams& p,
    const std::vector<double>& N_list, double delta, const SolverConfig& cfg,
    double multiplier_s, EnergyVariant variant) {
    if (!(p.alpha * p.gamma > 0.0))
        throw InvalidInputError("almost_conservation_run requires alpha*gamma > 0");

    AlmostConservationResult res;
    res.trajectory = evolve(SystemState{u0, v0, 0.0}, delta, cfg, p);
    if (res.trajectory.blew_up)
        return res;

    for (double N : N_list) {
        MultiplierSpec M{N, multiplier_s};
        FunctionalReport rep = evaluate_report(res.trajectory, p, M, variant);
        DriftRow row;
        row.N = N;
        row.E0 = rep.E.empty() ? 0.0 : rep.E[0];
        row.L0 = rep.L.empty() ? 0.0 : rep.L[0];
        for (size_t i = 0; i < rep.drift_E.size(); ++i) {
            row.drift_E = std::max(row.drift_E, rep.drift_E[i]);
            row.drift_L = std::max(row.drift_L, rep.drift_L[i]);
        }
        res.rows.push_back(row);
    }
    return res;
}

} // namespace skdv
