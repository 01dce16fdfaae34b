#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skdv/errors.hpp"
#include "skdv/inflation.hpp"
#include "skdv/quadrature.hpp"
#include "skdv/rng.hpp"

#include <cmath>

using namespace skdv;

TEST_CASE("time kernel: removable singularity and unit bound") {
    CHECK(std::abs(time_kernel(0.0, 1.0) - cplx(1.0, 0.0)) < 1e-15);

    // |K(Q, t)| <= |t| on a grid
    for (double Q = -50.0; Q <= 50.0; Q += 0.37)
        for (double t = -1.0; t <= 1.0; t += 0.125)
            CHECK(std::abs(time_kernel(Q, t)) <= std::abs(t) + 1e-14);

    // matches its defining integral on both sides of the series guard
    for (double Q : {1e-9, 1e-7, 9.9e-7, 1.1e-6, 0.03, 2.7, -11.0}) {
        const double t = 0.8;
        const int n = 20000;
        cplx acc = 0.5 * (cplx(1.0, 0.0) + std::exp(cplx(0.0, -Q * t)));
        for (int i = 1; i < n; ++i)
            acc += std::exp(cplx(0.0, -Q * (t * i / n)));
        acc *= t / n;
        CHECK(std::abs(time_kernel(Q, t) - acc) < 1e-8);
    }
}

TEST_CASE("resonance functions: algebraic identity and offset forms") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const double xi = 20.0 * (rng.uniform01() - 0.5);
        const double xi2 = 20.0 * (rng.uniform01() - 0.5);
        const double q1 = resonance_q1(xi, xi2);
        const double alt = xi * xi * xi + (xi - xi2) * (xi - xi2) - xi2 * xi2;
        CHECK(std::abs(q1 - alt) <= 1e-12 * std::max(1.0, std::abs(q1)));
    }

    const InflationConfig cfg = InflationConfig::make(16.0, 1e-2, 2, 0.0, 1.0);
    const double cU = cfg.upsilon().center, cU2 = cfg.upsilon2().center;
    for (int trial = 0; trial < 50; ++trial) {
        Rng r2(trial);
        const double p = (r2.uniform01() - 0.5) * cfg.upsilon().half_width;
        const double e = (r2.uniform01() - 0.5) * cfg.upsilon2().half_width;
        const double direct = resonance_q1(cU + p, cU2 + e);
        const double stable = resonance_q1_offsets(cfg.N, p, e);
        CHECK(std::abs(direct - stable) < 1e-7); // direct form cancels badly
        const double q2d = resonance_q2(2.0 + p, 1.0 + e);
        const double q2s = resonance_q2_offsets(p, e);
        CHECK(std::abs(q2d - q2s) < 1e-12 * std::max(1.0, std::abs(q2d)));
    }
}

TEST_CASE("config snapping and box geometry") {
    for (double target : {32.0, 64.0, 128.0, 256.0, 512.0}) {
        const InflationConfig cfg = InflationConfig::make(target, 1e-2, 6, 0.0, 1.0);
        CHECK(std::abs(cfg.N - target) < 0.01);
        const double turns = std::pow(cfg.N - 0.5, 3) / (2.0 * M_PI);
        CHECK(std::abs(turns - std::round(turns)) < 1e-9 * turns);

        // difference box inclusion and covering of the output window
        const auto U = cfg.upsilon(), U1 = cfg.upsilon1(), U2 = cfg.upsilon2();
        CHECK(std::abs((U.center - U2.center) - U1.center) + U.half_width +
                  U2.half_width <=
              U1.half_width * (1.0 + 1e-12));
        CHECK(U.half_width <= U1.half_width + U2.half_width);

        // cubic phase drift over the output window stays small:
        // 3 (N - 1/2)^2 / (100 N^2) < 3/100, harmless for the coherence bound
        const double c = cfg.N - 0.5;
        const double drift = 3.0 * c * c * U.half_width +
                             3.0 * c * U.half_width * U.half_width;
        CHECK(drift <= 0.03);

        // resonance stays below 1/10 on the box pair
        double worst = 0.0;
        for (double fp : {-1.0, -0.5, 0.0, 0.5, 1.0})
            for (double fe : {-1.0, -0.5, 0.0, 0.5, 1.0})
                worst = std::max(worst,
                                 std::abs(resonance_q1_offsets(
                                     cfg.N, fp * U.half_width, fe * U2.half_width)));
        CHECK(worst <= 0.1);
    }
}

TEST_CASE("second iterate vanishes off the convolution supports") {
    const InflationConfig cfg = InflationConfig::make(32.0, 1e-2, 2, 0.0, 1.0);
    SystemParams p{1.0, 1.0, 1.0, 0.0, 1.0};
    for (double xi : {0.5, 5.0, 17.0, 25.0, 40.0, -31.5})
        CHECK(std::abs(second_iterate_hat(xi, 1.0, cfg, p)) == 0.0);
}

TEST_CASE("second iterate matches a brute-force 2-D quadrature to 1e-8") {
    const InflationConfig cfg = InflationConfig::make(32.0, 1e-2, 2, 0.0, 1.0);
    SystemParams p{1.0, 1.0, 0.7, 0.0, 1.0};

    auto brute = [&](double xi, double t) {
        // trapezoid in t' (outer) x trapezoid in xi2 (inner), ~10x nodes
        const int nt = 2000, ne = 1281;
        cplx total = 0.0;
        { // short-wave pair over upsilon2 (admissible offsets)
            const double w1 = cfg.upsilon1().half_width;
            const double w2 = cfg.upsilon2().half_width;
            const double poff = xi - (cfg.N - 0.5);
            const double lo = std::max(-w2, poff - w1), hi = std::min(w2, poff + w1);
            if (hi > lo) {
                const double A = cfg.u_amplitude();
                const double he = (hi - lo) / (ne - 1);
                cplx acc_t = 0.0;
                for (int it = 0; it <= nt; ++it) { // Simpson in t'
                    const double tp = t * it / nt;
                    cplx acc_e = 0.0;
                    for (int ie = 0; ie < ne; ++ie) {
                        const double e = lo + he * ie;
                        const double Q = resonance_q1_offsets(cfg.N, poff, e);
                        const double wq = (ie == 0 || ie == ne - 1) ? 0.5 : 1.0;
                        acc_e += wq * std::exp(cplx(0.0, -tp * Q));
                    }
                    acc_e *= he;
                    const double wt =
                        (it == 0 || it == nt) ? 1.0 : (it % 2 ? 4.0 : 2.0);
                    acc_t += wt * acc_e;
                }
                acc_t *= t / nt / 3.0;
                total += p.gamma * A * A * acc_t;
            }
        }
        { // long-wave pair around 2
            const double wl = cfg.lambda_box().half_width;
            const double roff = xi - 2.0;
            const double lo = std::max(-wl, roff - wl), hi = std::min(wl, roff + wl);
            if (hi > lo) {
                const double B = cfg.v_amplitude();
                const double hq = (hi - lo) / (ne - 1);
                cplx acc_t = 0.0;
                for (int it = 0; it <= nt; ++it) { // Simpson in t'
                    const double tp = t * it / nt;
                    cplx acc_q = 0.0;
                    for (int iq = 0; iq < ne; ++iq) {
                        const double q = lo + hq * iq;
                        const double Q = resonance_q2_offsets(roff, q);
                        const double wq = (iq == 0 || iq == ne - 1) ? 0.5 : 1.0;
                        acc_q += wq * std::exp(cplx(0.0, -tp * Q));
                    }
                    acc_q *= hq;
                    const double wt =
                        (it == 0 || it == nt) ? 1.0 : (it % 2 ? 4.0 : 2.0);
                    acc_t += wt * acc_q;
                }
                acc_t *= t / nt / 3.0;
                total += -0.5 * B * B * acc_t;
            }
        }
        // common prefactor i xi e^{i t xi^3}; phase via the same offset route
        const double c = cfg.N - 0.5;
        cplx phase;
        if (std::abs(xi - c) < 1.0) {
            const double poff = xi - c;
            const double fr = std::fmod(double(cfg.k) * t, 1.0);
            phase = std::exp(cplx(
                0.0, 2.0 * M_PI * fr + t * poff * (3.0 * c * c + poff * (3.0 * c + poff))));
        } else {
            phase = std::exp(cplx(0.0, t * xi * xi * xi));
        }
        return cplx(0.0, xi) * phase * total;
    };

    const double cU = cfg.upsilon().center;
    for (double frac : {-0.6, 0.0, 0.7}) {
        for (double t : {0.35, 1.0}) {
            const double xi = cU + frac * cfg.upsilon().half_width;
            const cplx fast = second_iterate_hat(xi, t, cfg, p);
            const cplx slow = brute(xi, t);
            CHECK(std::abs(fast - slow) <= 1e-8 * std::abs(slow));
        }
    }
    { // long-wave window point
        const double xi = 2.0 + 0.5 * cfg.lambda_box().half_width;
        const cplx fast = second_iterate_hat(xi, 1.0, cfg, p);
        const cplx slow = brute(xi, 1.0);
        CHECK(std::abs(fast - slow) <= 1e-8 * std::abs(slow));
    }
}

TEST_CASE("conjugate symmetry of the long-wave term for symmetric data") {
    const InflationConfig cfg = InflationConfig::make(16.0, 1e-2, 2, 0.0, 1.0);
    SystemParams p{1.0, 1.0, 0.0, 0.0, 1.0}; // gamma = 0: long-wave term only
    const double wl = cfg.lambda_box().half_width;
    for (double roff : {-0.8 * wl, 0.0, 0.4 * wl, 1.3 * wl}) {
        for (double t : {0.4, 1.0}) {
            const cplx plus = second_iterate_hat(2.0 + roff, t, cfg, p, true);
            const cplx minus = second_iterate_hat(-(2.0 + roff), t, cfg, p, true);
            CHECK(std::abs(minus - std::conj(plus)) <=
                  1e-12 * std::max(1.0, std::abs(plus)));
        }
    }
}

TEST_CASE("experiment: slope near l - 4s, long-wave decay, phase coherence") {
    InflationReport rep = inflation_experiment(0.0, 1.0, {32.0, 64.0, 128.0}, 1e-2, 6);
    CHECK(rep.fit_total.slope == doctest::Approx(1.0).epsilon(0.2));
    CHECK(rep.fit_kdv.slope < -2.5);
    CHECK(rep.phase_min > 0.5);
    for (const auto& row : rep.rows)
        CHECK(row.quad_rel_change < 1e-3);
    CHECK_THROWS_AS(inflation_experiment(0.0, 1.0, {32.0, 64.0}, 1e-2, 6), FitError);
}

TEST_CASE("growth norm scales exactly quadratically in the data amplitude") {
    InflationReport a = inflation_experiment(0.0, 1.0, {32.0, 64.0, 128.0}, 1e-2, 6);
    InflationReport b = inflation_experiment(0.0, 1.0, {32.0, 64.0, 128.0}, 2e-2, 6);
    for (size_t i = 0; i < a.rows.size(); ++i)
        CHECK(b.rows[i].G_total ==
              doctest::Approx(4.0 * a.rows[i].G_total).epsilon(1e-12));
    CHECK(b.fit_total.slope == doctest::Approx(a.fit_total.slope).epsilon(1e-9));
}
