#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skdv/duhamel.hpp"
#include "skdv/errors.hpp"
#include "skdv/propagators.hpp"

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

// The solver truncates data to the 2/3 band; comparisons against it must
// start from identical band-limited data.
ComplexField band_limited(const ComplexField& f) {
    auto spec = f.spectrum();
    dealias_23(spec);
    return ComplexField::from_spectrum(f.grid(), std::move(spec));
}

RealField band_limited(const RealField& f) {
    auto spec = f.spectrum();
    dealias_23(spec);
    return RealField::from_spectrum(f.grid(), spec);
}

} // namespace

TEST_CASE("zero data is a fixed point") {
    Grid g(64, 16.0 * M_PI);
    ComplexField u0 = ComplexField::zero(g);
    RealField v0 = RealField::zero(g);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 0.0};
    PicardIterate it = initial_iterate(u0, v0, 256, 4.0 / 256, 0.5);
    CHECK(it.u.max_abs() == 0.0);
    PicardIterate next = picard_map(it, u0, v0, p, 0.5);
    CHECK(next.u.max_abs() == 0.0);
    CHECK(next.v.max_abs() == 0.0);
    CHECK(next.k == 1);
}

TEST_CASE("alpha = beta = 0: the short-wave map returns the windowed free wave") {
    Grid g(64, 16.0 * M_PI);
    ComplexField u0 = gaussian_u(g, 0.3, 2.0, 1);
    RealField v0 = gaussian_v(g, 0.4, 2.0);
    SystemParams p{0.0, 0.0, 1.0, 0.0, 0.0};
    const int nt = 256;
    const double dt = 4.0 / nt;
    PicardIterate it0 = initial_iterate(u0, v0, nt, dt, 0.5);
    PicardIterate it1 = picard_map(it0, u0, v0, p, 0.5);
    double worst = 0.0;
    for (size_t i = 0; i < it0.u.values().size(); ++i)
        worst = std::max(worst, std::abs(it1.u.values()[i] - it0.u.values()[i]));
    CHECK(worst < 1e-13);
}

TEST_CASE("resolution guard: fewer than 16 lattice points over [0, delta]") {
    Grid g(64, 16.0 * M_PI);
    ComplexField u0 = gaussian_u(g, 0.1, 2.0);
    RealField v0 = gaussian_v(g, 0.1, 2.0);
    CHECK_THROWS_AS(initial_iterate(u0, v0, 64, 4.0 / 64, 0.1), ResolutionError);
}

TEST_CASE("small data: 8 iterations track the time-stepped solution to 1e-6") {
    Grid g(64, 16.0 * M_PI);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 0.0};
    ComplexField u0 = band_limited(gaussian_u(g, 1e-2, 2.0, 1));
    RealField v0 = band_limited(gaussian_v(g, 1e-2, 2.0));

    const int nt = 512;
    const double dt = 4.0 / nt;
    const double delta = 0.25;

    PicardIterate it = initial_iterate(u0, v0, nt, dt, delta);
    for (int k = 0; k < 8; ++k)
        it = picard_map(it, u0, v0, p, delta);

    SolverConfig scfg;
    scfg.dt = dt / 8.0;
    scfg.record_every = 8;
    Trajectory traj = evolve(SystemState{u0, v0, 0.0}, delta, scfg, p);
    REQUIRE(!traj.blew_up);

    const int m0 = it.u.zero_index();
    double worst = 0.0;
    for (size_t r = 0; r < traj.states.size(); ++r) {
        const int m = m0 + static_cast<int>(r);
        REQUIRE(std::abs(it.u.t(m) - traj.times[r]) < 1e-10);
        const auto us = it.u.slice(m);
        const auto vs = it.v.slice(m);
        const SystemState& st = traj.states[r];
        for (int j = 0; j < g.nx(); ++j) {
            worst = std::max(worst, std::abs(us[j] - st.u.values()[j]));
            worst = std::max(worst, std::abs(vs[j] - st.v.values()[j]));
        }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("the converged iterate is a fixed point to quadrature tolerance") {
    Grid g(64, 16.0 * M_PI);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 0.0};
    ComplexField u0 = gaussian_u(g, 1e-2, 2.0, 1);
    RealField v0 = gaussian_v(g, 1e-2, 2.0);
    const int nt = 256;
    const double dt = 4.0 / nt;
    const double delta = 0.25;
    PicardIterate it = initial_iterate(u0, v0, nt, dt, delta);
    for (int k = 0; k < 10; ++k)
        it = picard_map(it, u0, v0, p, delta);
    PicardIterate again = picard_map(it, u0, v0, p, delta);
    CHECK(sup_difference(again, it) < 1e-12);
}

TEST_CASE("contraction probe: small data converges everywhere, power is negative") {
    Grid g(64, 16.0 * M_PI);
    SystemParams p{1.0, 1.0, 1.0, 0.0, -0.5};
    ComplexField u0 = gaussian_u(g, 1.0, 2.0, 1);
    RealField v0 = gaussian_v(g, 1.0, 2.0);
    const std::vector<double> deltas = {1.0, 0.5, 0.25, 0.125};

    SUBCASE("vanishing amplitude converges for every delta") {
        ContractionProbe probe = picard_contraction_probe(
            u0, v0, p, deltas, {1e-3}, 512, 4.0 / 512, 6);
        for (const auto& cell : probe.cells)
            CHECK(cell.contracted);
        CHECK(probe.conclusive);
    }

    SUBCASE("delta* does not grow with amplitude; fitted power < 0") {
        ContractionProbe probe = picard_contraction_probe(
            u0, v0, p, deltas, {0.5, 1.0, 2.0, 4.0, 8.0}, 512, 4.0 / 512, 6);
        REQUIRE(probe.conclusive);
        double prev = 1e300;
        for (const auto& star : probe.stars) {
            if (!star.found)
                continue;
            CHECK(star.delta_star <= prev * (1.0 + 1e-12));
            prev = star.delta_star;
        }
        REQUIRE(probe.power.has_value());
        CHECK(probe.power->slope < 0.0);
    }
}
