#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle_utils.hpp"

#include "skdv/errors.hpp"
#include "skdv/invariants.hpp"

#include <cmath>

using namespace skdv;

namespace {

ComplexField gaussian_u(const Grid& g, double amp, double width, int mod_k = 0) {
    std::vector<cplx> v(g.nx());
    const double k = g.xi(g.index_of_mode(mod_k));
    for (int j = 0; j < g.nx(); ++j) {
        const double x = g.x(j);
        v[j] = amp * std::exp(-x * x / (2.0 * width * width)) *
               std::exp(cplx(0.0, k * x));
    }
    return ComplexField::from_samples(g, std::move(v));
}

RealField gaussian_v(const Grid& g, double amp, double width) {
    std::vector<double> v(g.nx());
    for (int j = 0; j < g.nx(); ++j) {
        const double x = g.x(j);
        v[j] = amp * std::exp(-x * x / (2.0 * width * width));
    }
    return RealField::from_samples(g, std::move(v));
}

// Independent momentum-functional oracle: direct O(n^2) spectral derivative
// and plain Riemann sums, no shared code with functional_L.
double functional_L_oracle(const ComplexField& u, const RealField& v,
                           const SystemParams& p, const MultiplierSpec& M) {
    const Grid& g = u.grid();
    const int n = g.nx();
    auto apply = [&](const std::vector<cplx>& phys) {
        auto spec = oracle::dft_forward(phys, g.dx());
        std::vector<cplx> mspec(n), dspec(n);
        for (int i = 0; i < n; ++i) {
            const double m = smoothing_multiplier(g.xi(i), M);
            mspec[i] = (i == 0) ? 0.0 : spec[i] * m;
            dspec[i] = mspec[i] * cplx(0.0, g.xi(i));
        }
        dspec[0] = 0.0;
        // direct inverse sums
        std::vector<cplx> mf(n, 0.0), df(n, 0.0);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const cplx e = std::exp(cplx(0.0, g.xi(i) * g.x(j)));
                mf[j] += mspec[i] * e;
                df[j] += dspec[i] * e;
            }
            mf[j] /= g.length();
            df[j] /= g.length();
        }
        return std::make_pair(mf, df);
    };
    auto [iu, diu] = apply(u.values());
    std::vector<cplx> vphys(v.values().begin(), v.values().end());
    auto [iv, div_unused] = apply(vphys);
    (void)div_unused;
    double vv = 0.0, mom = 0.0;
    for (int j = 0; j < n; ++j) {
        vv += std::norm(iv[j]);
        mom += std::imag(iu[j] * std::conj(diu[j]));
    }
    return p.alpha * vv * g.dx() + 2.0 * p.gamma * mom * g.dx();
}

} // namespace

TEST_CASE("mass: zero, plane wave, equals H^0 norm") {
    Grid g(128, 6.0);
    CHECK(mass(ComplexField::zero(g)) == 0.0);

    std::vector<cplx> pw(g.nx());
    const double xi = g.xi(g.index_of_mode(4));
    for (int j = 0; j < g.nx(); ++j)
        pw[j] = std::exp(cplx(0.0, xi * g.x(j)));
    ComplexField f = ComplexField::from_samples(g, pw);
    CHECK(mass(f) == doctest::Approx(std::sqrt(g.length())).epsilon(1e-12));
    CHECK(mass(f) == doctest::Approx(sobolev_norm(f, 0.0)).epsilon(1e-12));
}

TEST_CASE("functional_L: zero state, real u, quadrature oracle") {
    Grid g(64, 8.0);
    SystemParams p{1.4, 0.7, -2.2, 0.0, 0.0};
    MultiplierSpec M{4.0, 0.5};

    CHECK(functional_L(ComplexField::zero(g), RealField::zero(g), p, M) == 0.0);

    // real-valued u: Im(Iu d_x conj(Iu)) integrates to zero, leaving a|Iv|^2
    RealField vr = gaussian_v(g, 0.8, 1.5);
    ComplexField ur = gaussian_u(g, 0.6, 1.2, 0);
    const double got = functional_L(ur, vr, p, M);
    const RealField Iv = apply_multiplier(vr, M);
    const double expect = p.alpha * l2_norm(Iv) * l2_norm(Iv);
    CHECK(got == doctest::Approx(expect).epsilon(1e-11));

    ComplexField uc = gaussian_u(g, 0.6, 1.2, 3);
    const double fast = functional_L(uc, vr, p, M);
    const double slow = functional_L_oracle(uc, vr, p, M);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-10));
}

TEST_CASE("functional_L is translation invariant to 1e-10") {
    Grid g(128, 8.0);
    SystemParams p{1.0, 0.0, 1.0, 0.0, 0.0};
    MultiplierSpec M{4.0, 0.5};
    ComplexField u = gaussian_u(g, 0.5, 1.0, 2);
    RealField v = gaussian_v(g, 0.5, 1.3);
    const double base = functional_L(u, v, p, M);

    const int shift = 17;
    std::vector<cplx> us(g.nx());
    std::vector<double> vs(g.nx());
    for (int j = 0; j < g.nx(); ++j) {
        us[j] = u.values()[(j + shift) % g.nx()];
        vs[j] = v.values()[(j + shift) % g.nx()];
    }
    const double shifted = functional_L(ComplexField::from_samples(g, us),
                                        RealField::from_samples(g, vs), p, M);
    CHECK(shifted == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("functional_E: zero state and beta=0 variant agreement") {
    Grid g(64, 8.0);
    MultiplierSpec M{4.0, 0.5};
    SystemParams p{1.0, 0.0, 1.0, 0.0, 0.0};
    CHECK(functional_E(ComplexField::zero(g), RealField::zero(g), p, M) == 0.0);

    ComplexField u = gaussian_u(g, 0.7, 1.2, 1);
    RealField v = gaussian_v(g, 0.9, 1.7);
    CHECK(functional_E(u, v, p, M, EnergyVariant::QuarticV) ==
          doctest::Approx(functional_E(u, v, p, M, EnergyVariant::QuarticU))
              .epsilon(1e-14));
}

TEST_CASE("M, L, E are invariant under a unimodular phase on u") {
    Grid g(64, 8.0);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 0.0};
    MultiplierSpec M{4.0, 0.5};
    ComplexField u = gaussian_u(g, 0.7, 1.2, 2);
    RealField v = gaussian_v(g, 0.9, 1.7);

    std::vector<cplx> rotated(g.nx());
    const cplx phase = std::exp(cplx(0.0, 1.234));
    for (int j = 0; j < g.nx(); ++j)
        rotated[j] = phase * u.values()[j];
    ComplexField ur = ComplexField::from_samples(g, rotated);

    CHECK(mass(apply_multiplier(ur, M)) ==
          doctest::Approx(mass(apply_multiplier(u, M))).epsilon(1e-13));
    CHECK(functional_L(ur, v, p, M) ==
          doctest::Approx(functional_L(u, v, p, M)).epsilon(1e-12));
    CHECK(functional_E(ur, v, p, M) ==
          doctest::Approx(functional_E(u, v, p, M)).epsilon(1e-12));
}

TEST_CASE("interp bound: zero state gives (0, 1); ratio stays sane") {
    Grid g(128, 8.0);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 0.0};
    MultiplierSpec M{8.0, 0.5};
    InterpBound z = interp_bound_check(ComplexField::zero(g), RealField::zero(g), p, M);
    CHECK(z.lhs == 0.0);
    CHECK(z.rhs == 1.0);

    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng(77, trial);
        auto uspec = oracle::random_band_limited_spectrum(g, 20, rng);
        for (auto& c : uspec)
            c *= 0.05;
        // Hermitian v spectrum
        std::vector<cplx> vspec(g.nx(), 0.0);
        for (int k = 1; k <= 20; ++k) {
            const cplx z2 = 0.05 * rng.cnormal();
            vspec[g.index_of_mode(k)] = z2;
            vspec[g.index_of_mode(-k)] = std::conj(z2);
        }
        vspec[g.index_of_mode(0)] = 0.05 * rng.normal();
        InterpBound b = interp_bound_check(ComplexField::from_spectrum(g, uspec),
                                           RealField::from_spectrum(g, vspec), p, M);
        worst = std::max(worst, b.lhs / b.rhs);
    }
    CHECK(worst < 1e3);
    CHECK(worst > 0.0);
}

TEST_CASE("pure-v states keep the bound ratio finite") {
    Grid g(128, 8.0);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 0.0};
    MultiplierSpec M{8.0, 0.5};
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(78, trial);
        std::vector<cplx> vspec(g.nx(), 0.0);
        for (int k = 1; k <= 15; ++k) {
            const cplx z = 0.02 * rng.cnormal();
            vspec[g.index_of_mode(k)] = z;
            vspec[g.index_of_mode(-k)] = std::conj(z);
        }
        InterpBound b = interp_bound_check(ComplexField::zero(g),
                                           RealField::from_spectrum(g, vspec), p, M);
        worst = std::max(worst, b.lhs / b.rhs);
    }
    CHECK(worst < 100.0);
}

TEST_CASE("conservation audit: exactly the |Iu|^4 variant is conserved") {
    Grid g(256, 32.0 * M_PI);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 0.0};
    ComplexField u0 = gaussian_u(g, 0.8, 3.0, 1);
    RealField v0 = gaussian_v(g, 0.8, 3.0);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.record_every = 50;
    Trajectory traj = evolve(SystemState{u0, v0, 0.0}, 0.25, cfg, p);
    REQUIRE(!traj.blew_up);

    const MultiplierSpec M{std::max(2.0, 2.0 * g.xi_max()), p.s}; // identity on grid
    FunctionalReport ru = evaluate_report(traj, p, M, EnergyVariant::QuarticU);
    FunctionalReport rv = evaluate_report(traj, p, M, EnergyVariant::QuarticV);

    const double du = ru.drift_E.back() / std::abs(ru.E[0]);
    const double dv = rv.drift_E.back() / std::abs(rv.E[0]);
    CHECK(du < 1e-8);
    CHECK(dv > 100.0 * du);

    // the momentum functional is exactly conserved as well
    const double dl = ru.drift_L.back() / std::max(std::abs(ru.L[0]), 1e-30);
    CHECK(dl < 1e-9);
}

TEST_CASE("almost_conservation_run: identity cutoff reproduces scheme-level drift") {
    Grid g(256, 16.0 * M_PI);
    SystemParams p{1.0, 1.0, 1.0, 0.5, 0.5};
    ComplexField u0 = gaussian_u(g, 0.5, 2.0, 1);
    RealField v0 = gaussian_v(g, 0.5, 2.0);
    SolverConfig cfg;
    cfg.dt = 1e-3;
    cfg.record_every = 20;

    const double N_identity = 2.0 * g.xi_max();
    auto res = almost_conservation_run(u0, v0, p, {N_identity}, 0.1, cfg, p.s);
    REQUIRE(!res.trajectory.blew_up);
    REQUIRE(res.rows.size() == 1);
    CHECK(res.rows[0].drift_E / std::abs(res.rows[0].E0) < 1e-6);

    SystemParams bad = p;
    bad.gamma = -1.0;
    CHECK_THROWS_AS(
        almost_conservation_run(u0, v0, bad, {8.0}, 0.1, cfg, bad.s),
        InvalidInputError);
}
