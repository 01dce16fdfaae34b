#include "skdv/estimates.hpp"

#include "skdv/errors.hpp"
#include "skdv/quadrature.hpp"
#include "skdv/window.hpp"

#include <cmath>

namespace skdv {

void EstimateCase::validate() const {
    for (double m : {b, bp, c, cp})
        if (!(m > 0.0) || !(m < 1.0))
            throw InvalidInputError("modulation indices must lie in (0, 1)");
}

RatioParts bilinear_parts(const EstimateCase& c, const SpaceTimeField& u,
                          const SpaceTimeField& v) {
    c.validate();
    if (u.max_abs() == 0.0 && v.max_abs() == 0.0)
        throw UndefinedRatioError("bilinear_ratio: both inputs vanish");
    if (u.max_abs() == 0.0 || v.max_abs() == 0.0)
        return RatioParts{}; // product vanishes identically
    RatioParts r;
    switch (c.kind) {
    case EstimateKind::SchrodingerProduct: {
        const SpaceTimeField uv = spacetime_product(u, v);
        r.lhs = xsb_norm(uv, NormSpec{c.s, c.bp - 1.0, Dispersion::Schrodinger});
        r.rhs = xsb_norm(u, NormSpec{c.s, c.b, Dispersion::Schrodinger}) *
                xsb_norm(v, NormSpec{c.l, c.c, Dispersion::Airy});
        break;
    }
    case EstimateKind::KdvOutput: {
        const SpaceTimeField w = spacetime_dx(spacetime_product(u, v, true));
        r.lhs = xsb_norm(w, NormSpec{c.l, c.cp - 1.0, Dispersion::Airy});
        r.rhs = xsb_norm(u, NormSpec{c.s, c.b, Dispersion::Schrodinger}) *
                xsb_norm(v, NormSpec{c.s, c.b, Dispersion::Schrodinger});
        break;
    }
    case EstimateKind::KdvProduct: {
        const SpaceTimeField w = spacetime_dx(spacetime_product(u, v));
        r.lhs = xsb_norm(w, NormSpec{c.l, c.cp - 1.0, Dispersion::Airy});
        r.rhs = xsb_norm(u, NormSpec{c.l, c.c, Dispersion::Airy}) *
                xsb_norm(v, NormSpec{c.l, c.c, Dispersion::Airy});
        break;
    }
    case EstimateKind::NlsTrilinear:
        throw InvalidInputError("trilinear case needs three inputs");
    }
    if (r.rhs == 0.0)
        throw UndefinedRatioError("bilinear_ratio: vanishing right-hand side");
    r.ratio = r.lhs / r.rhs;
    return r;
}

RatioParts trilinear_parts(const EstimateCase& c, const SpaceTimeField& u1,
                           const SpaceTimeField& u2, const SpaceTimeField& u3) {
    c.validate();
    if (c.kind != EstimateKind::NlsTrilinear)
        throw InvalidInputError("trilinear_ratio requires the trilinear case kind");
    if (u1.max_abs() == 0.0 && u2.max_abs() == 0.0 && u3.max_abs() == 0.0)
        throw UndefinedRatioError("trilinear_ratio: all inputs vanish");
    if (u1.max_abs() == 0.0 || u2.max_abs() == 0.0 || u3.max_abs() == 0.0)
        return RatioParts{};
    RatioParts r;
    const SpaceTimeField w = spacetime_triple_product(u1, u2, u3);
    r.lhs = xsb_norm(w, NormSpec{0.0, 0.0, Dispersion::Schrodinger});
    const NormSpec rhs_spec{c.s, c.b, Dispersion::Schrodinger};
    r.rhs = xsb_norm(u1, rhs_spec) * xsb_norm(u2, rhs_spec) * xsb_norm(u3, rhs_spec);
    if (r.rhs == 0.0)
        throw UndefinedRatioError("trilinear_ratio: vanishing right-hand side");
    r.ratio = r.lhs / r.rhs;
    return r;
}

double bilinear_ratio(const EstimateCase& c, const SpaceTimeField& u,
                      const SpaceTimeField& v) {
    return bilinear_parts(c, u, v).ratio;
}

double trilinear_ratio(const EstimateCase& c, const SpaceTimeField& u1,
                       const SpaceTimeField& u2, const SpaceTimeField& u3) {
    return trilinear_parts(c, u1, u2, u3).ratio;
}

SpaceTimeField make_localized_field(const Grid& g, int nt, double dt,
                                    const LocalizedBand& band, Rng& rng,
                                    double window_delta) {
    const int nx = g.nx();
    const double Thalf = nt * dt / 2.0;
    // Spectrum on the unpadded lattice, then synthesis column by column.
    std::vector<cplx> spec(size_t(nt) * nx, 0.0);
    for (int i = 0; i < nx; ++i) {
        const double xi = g.xi(i);
        if (xi < band.xi_lo || xi > band.xi_hi)
            continue;
        const double phi = dispersion_phi(band.dispersion, xi);
        for (int q = 0; q < nt; ++q) {
            const double tau = M_PI * (q - nt / 2) / Thalf;
            if (std::abs(tau + phi) <= band.mod_halfwidth)
                spec[size_t(q) * nx + i] = rng.cnormal();
        }
    }
    // Inverse in tau per mode column.
    std::vector<cplx> col(nt);
    for (int i = 0; i < nx; ++i) {
        for (int q = 0; q < nt; ++q)
            col[q] = spec[size_t(q) * nx + i];
        auto phys_t = fft::centered_inverse(col, dt);
        for (int m = 0; m < nt; ++m)
            spec[size_t(m) * nx + i] = phys_t[m];
    }
    // Inverse in xi per time slice.
    std::vector<cplx> row(nx);
    for (int m = 0; m < nt; ++m) {
        for (int i = 0; i < nx; ++i)
            row[i] = spec[size_t(m) * nx + i];
        auto phys_x = fft::centered_inverse(row, g.dx());
        for (int j = 0; j < nx; ++j)
            spec[size_t(m) * nx + j] = phys_x[j];
    }
    SpaceTimeField f(g, nt, dt, std::move(spec));
    return apply_window(f, window_delta);
}

namespace {

double overlap_length(double half_a, double half_b, double center_gap) {
    const double lo = std::max(-half_a, center_gap - half_b);
    const double hi = std::min(half_a, center_gap + half_b);
    return std::max(0.0, hi - lo);
}

QuadRule composite_gl(double a, double b, int per_panel, double panel_len) {
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_len)));
    const double h = (b - a) / panels;
    QuadRule out;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const QuadRule rule = gauss_legendre(per_panel, a + pnl * h, a + (pnl + 1) * h);
        out.x.insert(out.x.end(), rule.x.begin(), rule.x.end());
        out.w.insert(out.w.end(), rule.w.begin(), rule.w.end());
    }
    return out;
}

// int <sigma>^{2b} dsigma over [-w, w]; composite panels keep the rule
// accurate on wide bands (the weight's branch points sit at +-i).
double modulation_weight_integral(double b, double w) {
    const int panels = std::max(1, static_cast<int>(std::ceil(w)));
    const double h = 2.0 * w / panels;
    double acc = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const QuadRule rule = gauss_legendre(16, -w + pnl * h, -w + (pnl + 1) * h);
        for (int i = 0; i < 16; ++i)
            acc += rule.w[i] * std::pow(1.0 + rule.x[i] * rule.x[i], b);
    }
    return acc;
}

double box_weight_integral(const FrequencyInterval& box, double s, int points = 64) {
    const QuadRule rule = gauss_legendre(points, box.lo(), box.hi());
    double acc = 0.0;
    for (int i = 0; i < points; ++i)
        acc += rule.w[i] * std::pow(1.0 + rule.x[i] * rule.x[i], s);
    return acc;
}

} // namespace

CounterexampleResult counterexample_family(double N_target, const EstimateCase& c) {
    c.validate();
    if (c.kind != EstimateKind::KdvOutput)
        throw InvalidInputError("counterexample_family exercises the KdV-output case");

    CounterexampleResult res;
    res.small_N_warning = N_target < 16.0;

    const InflationConfig cfg = InflationConfig::make(N_target, 1.0, 1, c.s, c.l);
    res.N = cfg.N;
    const FrequencyInterval U = cfg.upsilon(), U1 = cfg.upsilon1(), U2 = cfg.upsilon2();
    const double band1 = 100.0, band2 = 10.0, band_out = 10.0;

    // Output block {xi in upsilon, |tau - xi^3| <= 10}: the convolution value
    // is the tau2-overlap length integrated over the admissible xi2 offsets.
    // The tau2 centers sit a distance sigma + q1 apart, by the resonance
    // identity xi2^2 - xi1^2 - xi^3 = -q1.
    const int np = 64, ne = 128;
    const QuadRule rp = gauss_legendre(np, -U.half_width, U.half_width);
    const QuadRule rs = composite_gl(-band_out, band_out, 16, 1.0);
    const int ns = static_cast<int>(rs.x.size());
    double lhs2 = 0.0;
    double max_q1 = 0.0;
    for (int ip = 0; ip < np; ++ip) {
        const double p_off = rp.x[ip];
        const double xi = U.center + p_off;
        const double lo = std::max(-U2.half_width, p_off - U1.half_width);
        const double hi = std::min(U2.half_width, p_off + U1.half_width);
        if (!(hi > lo))
            continue;
        const QuadRule re = gauss_legendre(ne, lo, hi);
        const double xw = xi * xi * std::pow(1.0 + xi * xi, c.l);
        for (int is = 0; is < ns; ++is) {
            const double sigma = rs.x[is];
            double conv = 0.0;
            for (int ie = 0; ie < ne; ++ie) {
                const double q1 = resonance_q1_offsets(cfg.N, p_off, re.x[ie]);
                max_q1 = std::max(max_q1, std::abs(q1));
                conv += re.w[ie] * overlap_length(band2, band1, sigma + q1);
            }
            const double wmod = std::pow(1.0 + sigma * sigma, c.cp - 1.0);
            lhs2 += rp.w[ip] * rs.w[is] * xw * wmod * conv * conv;
        }
    }
    res.lhs = std::sqrt(lhs2);
    res.max_abs_q1 = max_q1;

    // Indicator norms: support measure under the case weights.  The second
    // factor is the conjugate one; its own modulation band sits on the
    // short-wave surface after reflection, so the weight reads the band
    // directly.
    res.norm_u1 = std::sqrt(box_weight_integral(U1, c.s) *
                            modulation_weight_integral(c.b, band1));
    res.norm_u2 = std::sqrt(box_weight_integral(U2, c.s) *
                            modulation_weight_integral(c.b, band2));
    if (res.norm_u1 == 0.0 || res.norm_u2 == 0.0)
        throw UndefinedRatioError("counterexample_family: vanishing norms");
    res.ratio = res.lhs / (res.norm_u1 * res.norm_u2);
    return res;
}

} // namespace skdv
