#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle_utils.hpp"

#include "skdv/errors.hpp"
#include "skdv/field.hpp"
#include "skdv/multiplier.hpp"
#include "skdv/spacetime.hpp"
#include "skdv/window.hpp"

#include <cmath>

using namespace skdv;

namespace {

ComplexField plane_wave(const Grid& g, int k, cplx amplitude = 1.0) {
    std::vector<cplx> v(g.nx());
    for (int j = 0; j < g.nx(); ++j)
        v[j] = amplitude * std::exp(cplx(0.0, g.xi(g.index_of_mode(k)) * g.x(j)));
    return ComplexField::from_samples(g, std::move(v));
}

} // namespace

TEST_CASE("centered transform matches the direct Fourier sum") {
    Grid g(16, 3.0);
    Rng rng(11);
    std::vector<cplx> f(g.nx());
    for (auto& z : f)
        z = rng.cnormal();
    auto fast = fft::centered_forward(f, g.dx());
    auto slow = oracle::dft_forward(f, g.dx());
    for (int i = 0; i < g.nx(); ++i)
        CHECK(std::abs(fast[i] - slow[i]) < 1e-12 * 16.0);
}

TEST_CASE("forward then inverse transform is the identity to 1e-12") {
    Grid g(128, 10.0);
    Rng rng(5);
    std::vector<cplx> f(g.nx());
    for (auto& z : f)
        z = rng.cnormal();
    auto back = fft::centered_inverse(fft::centered_forward(f, g.dx()), g.dx());
    double worst = 0.0, scale = 0.0;
    for (int j = 0; j < g.nx(); ++j) {
        worst = std::max(worst, std::abs(back[j] - f[j]));
        scale = std::max(scale, std::abs(f[j]));
    }
    CHECK(worst < 1e-12 * scale);
}

TEST_CASE("Parseval in space to 1e-10 on random data") {
    Grid g(256, 8.0);
    Rng rng(7);
    std::vector<cplx> f(g.nx());
    for (auto& z : f)
        z = rng.cnormal();
    ComplexField F = ComplexField::from_samples(g, f);
    const double phys = oracle::l2_quadrature(f, g.dx());
    double spec = 0.0;
    for (const auto& z : F.spectrum())
        spec += std::norm(z);
    spec = std::sqrt(spec / g.length());
    CHECK(phys == doctest::Approx(spec).epsilon(1e-10));
}

TEST_CASE("grid invariants") {
    Grid g(64, 5.0);
    CHECK(g.dx() * g.nx() == doctest::Approx(2.0 * g.half_length()).epsilon(1e-15));
    // lattice symmetric about zero except the single Nyquist mode
    for (int k = 1; k < g.nx() / 2; ++k)
        CHECK(g.xi(g.index_of_mode(k)) == doctest::Approx(-g.xi(g.index_of_mode(-k))));
    CHECK_THROWS_AS(Grid(48, 1.0), InvalidInputError);
    CHECK_THROWS_AS(Grid(4, 1.0), InvalidInputError);
}

TEST_CASE("sobolev_norm: zero field, plane wave, quadrature oracle, monotonicity") {
    Grid g(128, 4.0);

    CHECK(sobolev_norm(ComplexField::zero(g), 0.7) == 0.0);

    // e^{ikx} on [-L, L): norm^2 = 2L <k>^{2s}
    const int k = 5;
    const double xi = g.xi(g.index_of_mode(k));
    ComplexField pw = plane_wave(g, k);
    for (double s : {-0.5, 0.0, 0.6, 1.0}) {
        const double expected = std::sqrt(g.length() * std::pow(1.0 + xi * xi, s));
        CHECK(sobolev_norm(pw, s) == doctest::Approx(expected).epsilon(1e-10));
    }

    Rng rng(23);
    auto spec = oracle::random_band_limited_spectrum(g, 30, rng);
    ComplexField f = ComplexField::from_spectrum(g, spec);
    CHECK(sobolev_norm(f, 0.0) ==
          doctest::Approx(oracle::l2_quadrature(f.values(), g.dx())).epsilon(1e-10));

    // monotone in s for fixed f
    double prev = sobolev_norm(f, -1.0);
    for (double s : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
        const double cur = sobolev_norm(f, s);
        CHECK(cur >= prev * (1.0 - 1e-13));
        prev = cur;
    }

    std::vector<cplx> bad(g.nx(), 0.0);
    bad[3] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(sobolev_norm(ComplexField::from_samples(g, bad), 0.0),
                    InvalidInputError);
}

TEST_CASE("real field spectra are Hermitian to 1e-12") {
    Grid g(128, 6.0);
    Rng rng(3);
    std::vector<double> v(g.nx());
    for (auto& x : v)
        x = rng.normal();
    RealField f = RealField::from_samples(g, v);
    CHECK(f.hermitian_residue() < 1e-12);
}

TEST_CASE("smoothing multiplier: closed forms, continuity, monotonicity") {
    MultiplierSpec M{16.0, 0.4};

    CHECK(smoothing_multiplier(3.0, M) == 1.0);
    CHECK(smoothing_multiplier(-15.9, M) == 1.0);
    const double xi_tail = 70.0;
    CHECK(smoothing_multiplier(xi_tail, M) ==
          doctest::Approx(std::pow(M.N, 1.0 - M.s) * std::pow(xi_tail, M.s - 1.0))
              .epsilon(1e-13));

    // continuity at both blend-band edges
    CHECK(std::abs(smoothing_multiplier(M.N * (1.0 + 1e-13), M) - 1.0) < 1e-12);
    const double edge2 = std::pow(M.N, 1.0 - M.s) * std::pow(2.0 * M.N, M.s - 1.0);
    CHECK(std::abs(smoothing_multiplier(2.0 * M.N, M) - edge2) < 1e-12);

    // non-increasing in |xi| for s < 1, and 0 < m <= 1
    double prev = 1.0;
    for (double xi = 0.0; xi <= 5.0 * M.N; xi += 0.05) {
        const double m = smoothing_multiplier(xi, M);
        CHECK(m > 0.0);
        CHECK(m <= 1.0 + 1e-15);
        CHECK(m <= prev + 1e-14);
        prev = m;
    }
}

TEST_CASE("apply_multiplier on plane waves and zero") {
    Grid g(256, M_PI); // integer frequency lattice
    MultiplierSpec M{8.0, 0.3};

    ComplexField low = plane_wave(g, 5);
    ComplexField same = apply_multiplier(low, M);
    for (int j = 0; j < g.nx(); ++j)
        CHECK(std::abs(same.values()[j] - low.values()[j]) < 1e-12);

    const int khigh = 40; // |k| > 2N
    ComplexField high = plane_wave(g, khigh);
    ComplexField scaled = apply_multiplier(high, M);
    const double factor = std::pow(M.N, 1.0 - M.s) * std::pow(double(khigh), M.s - 1.0);
    for (int j = 0; j < g.nx(); ++j)
        CHECK(std::abs(scaled.values()[j] - factor * high.values()[j]) < 1e-12);

    ComplexField z = apply_multiplier(ComplexField::zero(g), M);
    CHECK(z.max_abs() == 0.0);
}

TEST_CASE("multiplier equivalence: single mode and low-frequency plateau") {
    Grid g(256, M_PI);
    MultiplierSpec M{8.0, 0.3};

    ComplexField one = plane_wave(g, 1);
    auto r = multiplier_equivalence_check(one, M);
    const double expect_lower = std::pow(2.0, (1.0 - M.s) / 2.0); // <1>^{1-s}
    CHECK(r.lower == doctest::Approx(expect_lower).epsilon(1e-12));
    CHECK(r.upper ==
          doctest::Approx(expect_lower / std::pow(M.N, 1.0 - M.s)).epsilon(1e-12));

    // support inside |xi| <= 1: m = 1 there, so lower ratio in [1, sqrt(2)]
    std::vector<cplx> spec(g.nx(), 0.0);
    spec[g.index_of_mode(0)] = 1.0;
    spec[g.index_of_mode(1)] = 0.5;
    spec[g.index_of_mode(-1)] = cplx(0.2, 0.4);
    auto rr = multiplier_equivalence_check(ComplexField::from_spectrum(g, spec), M);
    CHECK(rr.lower >= 1.0);
    CHECK(rr.lower <= std::sqrt(2.0) + 1e-12);

    CHECK_THROWS_AS(multiplier_equivalence_check(ComplexField::zero(g), M),
                    UndefinedRatioError);
}

TEST_CASE("multiplier equivalence bounds hold on a 200-field ensemble") {
    Grid g(512, M_PI);
    MultiplierSpec M{64.0, 0.6};
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng(1000, trial);
        auto spec = oracle::random_band_limited_spectrum(g, 150, rng);
        auto r = multiplier_equivalence_check(ComplexField::from_spectrum(g, spec), M);
        CHECK(r.lower >= 1.0);
        CHECK(r.upper <= 2.0);
    }
}

TEST_CASE("bump window: plateau, support, evenness") {
    CHECK(bump_window(0.3) == 1.0);
    CHECK(bump_window(-1.0) == 1.0);
    CHECK(bump_window(2.0) == 0.0);
    CHECK(bump_window(2.7) == 0.0);
    for (double t : {0.2, 0.9, 1.3, 1.9, 2.5})
        CHECK(bump_window(t) == bump_window(-t));
    // strictly decreasing through the transition
    CHECK(bump_window(1.2) > bump_window(1.5));
    CHECK(bump_window(1.5) > bump_window(1.8));
}

TEST_CASE("apply_window: plateau identity, support, time-reversal symmetry") {
    Grid g(16, 2.0);
    const int nt = 64;
    const double dt = 8.0 / nt; // window [-4, 4)
    Rng rng(9);
    std::vector<cplx> vals(size_t(g.nx()) * nt);
    for (auto& z : vals)
        z = rng.cnormal();
    SpaceTimeField F(g, nt, dt, vals);

    const double delta = 1.0;
    SpaceTimeField W = apply_window(F, delta);
    for (int m = 0; m < nt; ++m) {
        const double t = F.t(m);
        for (int j = 0; j < g.nx(); ++j) {
            if (std::abs(t) <= delta)
                CHECK(W.at(j, m) == F.at(j, m));
            if (std::abs(t) >= 2.0 * delta)
                CHECK(std::abs(W.at(j, m)) == 0.0);
        }
    }

    // windowing F(x,-t) equals time-reversing the windowed F(x,t); the
    // reversal pairs t_m with -t_m, i.e. index m with nt - m.
    std::vector<cplx> rev(vals.size());
    for (int m = 0; m < nt; ++m) {
        const int mr = (nt - m) % nt;
        for (int j = 0; j < g.nx(); ++j)
            rev[size_t(m) * g.nx() + j] = vals[size_t(mr) * g.nx() + j];
    }
    SpaceTimeField Wrev = apply_window(SpaceTimeField(g, nt, dt, rev), delta);
    for (int m = 1; m < nt; ++m) { // m = 0 has no partner (half-open window)
        const int mr = nt - m;
        if (mr >= nt)
            continue;
        for (int j = 0; j < g.nx(); ++j)
            CHECK(Wrev.at(j, m) == W.at(j, mr));
    }

    CHECK_THROWS_AS(apply_window(F, 3.0), WindowError);
}

TEST_CASE("xsb_norm: zero field and L2 agreement at s=b=0") {
    Grid g(32, 2.0);
    const int nt = 32;
    const double dt = 0.1;
    CHECK(xsb_norm(SpaceTimeField::zero(g, nt, dt), NormSpec{}) == 0.0);

    Rng rng(14);
    std::vector<cplx> vals(size_t(g.nx()) * nt);
    for (auto& z : vals)
        z = rng.cnormal();
    SpaceTimeField F(g, nt, dt, vals);
    const double l2 = oracle::l2_quadrature_2d(vals, g.dx(), dt);
    CHECK(xsb_norm(F, NormSpec{0.0, 0.0, Dispersion::Schrodinger}) ==
          doctest::Approx(l2).epsilon(1e-10));
    CHECK(xsb_norm(F, NormSpec{0.0, 0.0, Dispersion::Airy}) ==
          doctest::Approx(l2).epsilon(1e-10));
}

TEST_CASE("space-time Parseval to 1e-10") {
    Grid g(32, 2.0);
    const int nt = 32;
    const double dt = 0.05;
    Rng rng(15);
    std::vector<cplx> vals(size_t(g.nx()) * nt);
    for (auto& z : vals)
        z = rng.cnormal();
    SpaceTimeField F(g, nt, dt, vals);
    const SpaceTimeSpectrum S = F.spectrum(4);
    double acc = 0.0;
    for (const auto& z : S.data)
        acc += std::norm(z);
    const double spec_l2 = std::sqrt(acc / (2.0 * S.Lbox * 2.0 * S.Thalf));
    CHECK(spec_l2 ==
          doctest::Approx(oracle::l2_quadrature_2d(vals, g.dx(), dt)).epsilon(1e-10));
}

TEST_CASE("xsb_norm of windowed free waves matches the 1-D window oracle") {
    Grid g(32, M_PI);
    const int nt = 256;
    const double dt = 8.0 / nt; // window [-4, 4)

    const double b = 0.3;
    const double sqrt2L = std::sqrt(g.length());
    const double mod = oracle::windowed_free_wave_modulation_norm(b);

    SUBCASE("schrodinger wave e^{ikx} e^{-ik^2 t}") {
        const int k = 2;
        const double xi = g.xi(g.index_of_mode(k));
        auto F = SpaceTimeField::sample(g, nt, dt, [&](double x, double t) {
            return std::exp(cplx(0.0, xi * x - xi * xi * t)) * bump_window(t);
        });
        const double got = xsb_norm(F, NormSpec{0.0, b, Dispersion::Schrodinger});
        CHECK(got == doctest::Approx(sqrt2L * mod).epsilon(0.02));
    }

    SUBCASE("airy wave e^{ikx} e^{ik^3 t}") {
        const int k = 2;
        const double xi = g.xi(g.index_of_mode(k));
        auto F = SpaceTimeField::sample(g, nt, dt, [&](double x, double t) {
            return std::exp(cplx(0.0, xi * x + xi * xi * xi * t)) * bump_window(t);
        });
        const double got = xsb_norm(F, NormSpec{0.0, b, Dispersion::Airy});
        CHECK(got == doctest::Approx(sqrt2L * mod).epsilon(0.02));
    }
}

TEST_CASE("resolution guards") {
    Grid g(16, 1.0);
    CHECK_THROWS_AS(SpaceTimeField::zero(g, 4, 0.1), ResolutionError);
}
