#include "skdv/inflation.hpp"

#include "skdv/errors.hpp"
#include "skdv/quadrature.hpp"

#include <cmath>

namespace skdv {

namespace {

inline cplx unit_phase(double a) { return cplx(std::cos(a), std::sin(a)); }

// e^{i t xi^3} for xi = (N - 1/2) + p without forming the huge cube:
// xi^3 = 2 pi k + p (3 c^2 + 3 c p + p^2), c = N - 1/2.
cplx cubic_phase_near_box(const InflationConfig& cfg, double p, double t) {
    const double c = cfg.N - 0.5;
    const double frac_turns = std::fmod(double(cfg.k) * t, 1.0);
    const double rest = t * p * (3.0 * c * c + p * (3.0 * c + p));
    return unit_phase(2.0 * M_PI * frac_turns + rest);
}

struct Overlap {
    double lo = 0.0, hi = 0.0;
    bool empty() const { return !(hi > lo); }
};

// Offsets q of xi2 around center cb such that |q| <= wb and |r - q| <= wa
// (i.e. xi - xi2 stays inside the partner box), where r = xi - (ca + cb).
Overlap pair_overlap(double r, double wa, double wb) {
    Overlap o;
    o.lo = std::max(-wb, r - wa);
    o.hi = std::min(wb, r + wa);
    return o;
}

} // namespace

InflationConfig InflationConfig::make(double N_target, double eps0, int n, double s,
                                      double l, int quad_outer, int quad_inner) {
    if (!(N_target >= 4.0))
        throw InvalidInputError("cutoff N must be at least 4");
    if (n < 1)
        throw InvalidInputError("lambda width exponent n must be >= 1");
    InflationConfig cfg;
    const double c_target = std::pow(N_target - 0.5, 3) / (2.0 * M_PI);
    cfg.k = static_cast<long long>(std::llround(c_target));
    cfg.N = 0.5 + std::cbrt(2.0 * M_PI * double(cfg.k));
    cfg.eps0 = eps0;
    cfg.n = n;
    cfg.s = s;
    cfg.l = l;
    cfg.quad_outer = quad_outer;
    cfg.quad_inner = quad_inner;
    cfg.validate();
    return cfg;
}

FrequencyInterval InflationConfig::upsilon() const {
    return {N - 0.5, 1.0 / (100.0 * N * N)};
}
FrequencyInterval InflationConfig::upsilon1() const {
    return {N - N * N / 2.0 - 0.375, 1.0 / N};
}
FrequencyInterval InflationConfig::upsilon2() const {
    return {N * N / 2.0 - 0.125, 1.0 / (200.0 * N)};
}
FrequencyInterval InflationConfig::lambda_box() const {
    return {1.0, std::pow(N, -double(n))};
}

double InflationConfig::u_amplitude() const {
    return eps0 * std::pow(N, -2.0 * s + 0.5);
}
double InflationConfig::v_amplitude() const {
    return eps0 * std::pow(N, 0.5 * double(n));
}

void InflationConfig::validate() const {
    if (!(eps0 > 0.0))
        throw InvalidInputError("eps0 must be positive");
    if (quad_outer < 4 || quad_inner < 4)
        throw InvalidInputError("quadrature orders must be at least 4");
    const double turns = std::pow(N - 0.5, 3) / (2.0 * M_PI);
    if (std::abs(turns - double(k)) > 1e-9 * std::max(1.0, std::abs(turns)))
        throw InvalidInputError("cutoff not snapped: (N - 1/2)^3 is not a 2*pi multiple");
    // xi in upsilon, xi2 in upsilon2  =>  xi - xi2 in upsilon1 ...
    const FrequencyInterval U = upsilon(), U1 = upsilon1(), U2 = upsilon2();
    const double off = (U.center - U2.center) - U1.center;
    if (std::abs(off) + U.half_width + U2.half_width > U1.half_width * (1.0 + 1e-12))
        throw InvalidInputError("box mismatch: upsilon - upsilon2 escapes upsilon1");
    // ... and upsilon is covered by upsilon1 + upsilon2.
    if (U.half_width > U1.half_width + U2.half_width)
        throw InvalidInputError("box mismatch: upsilon not covered by the pair sum");
}

cplx time_kernel(double Q, double t) {
    const double qt = Q * t;
    if (std::abs(Q) < 1e-6) {
        // t [1 + (-iqt)/2 + (-iqt)^2/6 + (-iqt)^3/24]
        const cplx z(0.0, -qt);
        return t * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0))));
    }
    const cplx num = 1.0 - unit_phase(-qt);
    return num / cplx(0.0, Q);
}

double resonance_q1(double xi, double xi2) {
    return xi * (xi * xi + xi - 2.0 * xi2);
}

double resonance_q2(double xi, double xi2) {
    return 3.0 * xi * (xi - xi2) * xi2;
}

double resonance_q1_offsets(double N, double p, double e) {
    return (N - 0.5 + p) * (2.0 * N * p + p * p - 2.0 * e);
}

double resonance_q2_offsets(double r, double q) {
    return 3.0 * (2.0 + r) * (1.0 + r - q) * (1.0 + q);
}

namespace {

// I_u at output offset p from the upsilon center: amplitude^2 times the
// kernel integrated over the admissible high-box offsets.
cplx short_pair_integral(const InflationConfig& cfg, double p, double t) {
    const double w1 = cfg.upsilon1().half_width;
    const double w2 = cfg.upsilon2().half_width;
    const Overlap o = pair_overlap(p, w1, w2);
    if (o.empty())
        return 0.0;
    const QuadRule rule = gauss_legendre(cfg.quad_inner, o.lo, o.hi);
    cplx acc = 0.0;
    for (int i = 0; i < cfg.quad_inner; ++i)
        acc += rule.w[i] * time_kernel(resonance_q1_offsets(cfg.N, p, rule.x[i]), t);
    const double A = cfg.u_amplitude();
    return A * A * acc;
}

// I_v at output offset r from the pair-sum center ca + cb of two long-wave
// boxes (centers ca, cb, widths w).
cplx long_pair_integral(const InflationConfig& cfg, double ca, double cb, double r,
                        double t) {
    const double w = cfg.lambda_box().half_width;
    const Overlap o = pair_overlap(r, w, w);
    if (o.empty())
        return 0.0;
    const QuadRule rule = gauss_legendre(cfg.quad_inner, o.lo, o.hi);
    cplx acc = 0.0;
    for (int i = 0; i < cfg.quad_inner; ++i) {
        // q2 in offsets around the generic centers: xi = ca + cb + r,
        // xi - xi2 = ca + (r - q), xi2 = cb + q.
        const double q = rule.x[i];
        const double Q = 3.0 * (ca + cb + r) * (ca + (r - q)) * (cb + q);
        acc += rule.w[i] * time_kernel(Q, t);
    }
    const double B = cfg.v_amplitude();
    return B * B * acc;
}

struct LongWindow {
    double center; // pair-sum center
    double ca, cb; // factor box centers
};

std::vector<LongWindow> long_windows(const InflationConfig& cfg, bool symmetrize) {
    const double c = cfg.lambda_box().center;
    if (!symmetrize)
        return {{2.0 * c, c, c}};
    // lambda and its mirror: pair sums at +-2 and (twice) at 0.
    return {{2.0 * c, c, c}, {-2.0 * c, -c, -c}, {0.0, c, -c}, {0.0, -c, c}};
}

} // namespace

cplx second_iterate_hat(double xi, double t, const InflationConfig& cfg,
                        const SystemParams& p, bool symmetrize_v) {
    cfg.validate();
    cplx total = 0.0;
    const double w1 = cfg.upsilon1().half_width;
    const double w2 = cfg.upsilon2().half_width;
    const double wl = cfg.lambda_box().half_width;

    const double c_pair = cfg.N - 0.5; // upsilon1 + upsilon2 center
    const double p_off = xi - c_pair;
    if (std::abs(p_off) <= w1 + w2) {
        const cplx I_u = short_pair_integral(cfg, p_off, t);
        total += p.gamma * cplx(0.0, xi) * cubic_phase_near_box(cfg, p_off, t) * I_u;
    }

    for (const LongWindow& lw : long_windows(cfg, symmetrize_v)) {
        const double r = xi - lw.center;
        if (std::abs(r) > 2.0 * wl)
            continue;
        const cplx I_v = long_pair_integral(cfg, lw.ca, lw.cb, r, t);
        const cplx phase = unit_phase(t * xi * xi * xi);
        total += -0.5 * cplx(0.0, xi) * phase * I_v;
    }
    return total;
}

namespace {

const std::vector<double>& t_grid() {
    static const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                             0.6, 0.7, 0.8, 0.9, 1.0};
    return grid;
}

// <xi>^l-weighted L^2 norm of the short-wave pair term over upsilon at one t.
double short_term_norm(const InflationConfig& cfg, double gamma, double t,
                       int outer_points) {
    const FrequencyInterval U = cfg.upsilon();
    const QuadRule rule = gauss_legendre(outer_points, -U.half_width, U.half_width);
    double acc = 0.0;
    for (int i = 0; i < outer_points; ++i) {
        const double p_off = rule.x[i];
        const double xi = U.center + p_off;
        const cplx I_u = short_pair_integral(cfg, p_off, t);
        const double amp = gamma * xi * std::abs(I_u); // |i xi e^{i t xi^3}| = |xi|
        acc += rule.w[i] * std::pow(1.0 + xi * xi, cfg.l) * amp * amp;
    }
    return std::sqrt(acc);
}

// Same for the long-wave self-interaction over its own output window
// |xi - 2| <= 2 N^{-n}, split at the kink of the overlap length.
double long_term_norm(const InflationConfig& cfg, double t, int outer_points) {
    const double wl = cfg.lambda_box().half_width;
    const double c = 2.0 * cfg.lambda_box().center;
    double acc = 0.0;
    for (int panel = 0; panel < 2; ++panel) {
        const double a = (panel == 0) ? -2.0 * wl : 0.0;
        const double b = (panel == 0) ? 0.0 : 2.0 * wl;
        const QuadRule rule = gauss_legendre(outer_points, a, b);
        for (int i = 0; i < outer_points; ++i) {
            const double r = rule.x[i];
            const double xi = c + r;
            const cplx I_v = long_pair_integral(cfg, 1.0, 1.0, r, t);
            const double amp = 0.5 * std::abs(xi) * std::abs(I_v);
            acc += rule.w[i] * std::pow(1.0 + xi * xi, cfg.l) * amp * amp;
        }
    }
    return std::sqrt(acc);
}

double max_over_t(const InflationConfig& cfg, double gamma, int outer,
                  bool long_term) {
    double best = 0.0;
    for (double t : t_grid()) {
        const double g = long_term ? long_term_norm(cfg, t, outer)
                                   : short_term_norm(cfg, gamma, t, outer);
        best = std::max(best, g);
    }
    return best;
}

// min over quadrature nodes and a t' grid of Re(e^{i xi^3} e^{-i t' q1}).
double phase_coherence_min(const InflationConfig& cfg) {
    const FrequencyInterval U = cfg.upsilon();
    const QuadRule outer = gauss_legendre(cfg.quad_outer, -U.half_width, U.half_width);
    double worst = 1.0;
    for (int i = 0; i < cfg.quad_outer; ++i) {
        const double p_off = outer.x[i];
        const cplx cube = cubic_phase_near_box(cfg, p_off, 1.0);
        const double w1 = cfg.upsilon1().half_width;
        const double w2 = cfg.upsilon2().half_width;
        const Overlap o = pair_overlap(p_off, w1, w2);
        if (o.empty())
            continue;
        const QuadRule inner = gauss_legendre(cfg.quad_inner, o.lo, o.hi);
        for (int j = 0; j < cfg.quad_inner; ++j) {
            const double Q = resonance_q1_offsets(cfg.N, p_off, inner.x[j]);
            for (int it = 0; it <= 16; ++it) {
                const double tp = it / 16.0;
                worst = std::min(worst, std::real(cube * unit_phase(-tp * Q)));
            }
        }
    }
    return worst;
}

} // namespace

InflationReport inflation_experiment(double s, double l,
                                     const std::vector<double>& N_targets,
                                     double eps0, int n, int quad_outer,
                                     int quad_inner, double gamma) {
    if (N_targets.size() < 3)
        throw FitError("inflation_experiment needs at least 3 cutoffs");

    InflationReport rep;
    rep.s = s;
    rep.l = l;
    rep.eps0 = eps0;
    rep.gamma = gamma;
    rep.n = n;
    rep.quad_outer = quad_outer;
    rep.quad_inner = quad_inner;
    rep.phase_min = 1.0;

    std::vector<std::pair<double, double>> pts_total, pts_kdv;
    for (double N_target : N_targets) {
        InflationConfig cfg =
            InflationConfig::make(N_target, eps0, n, s, l, quad_outer, quad_inner);
        InflationRow row;
        row.N = cfg.N;
        row.k = cfg.k;
        row.G_nls = max_over_t(cfg, gamma, quad_outer, false);
        row.G_kdv = max_over_t(cfg, gamma, quad_outer, true);
        // The two terms live on disjoint supports; over upsilon the total is
        // the short-wave term.
        row.G_total = row.G_nls;
        row.phase_min = phase_coherence_min(cfg);
        rep.phase_min = std::min(rep.phase_min, row.phase_min);

        InflationConfig fine = cfg;
        fine.quad_outer *= 2;
        fine.quad_inner *= 2;
        const double refined = max_over_t(fine, gamma, fine.quad_outer, false);
        row.quad_rel_change =
            (row.G_total > 0.0) ? std::abs(refined - row.G_total) / row.G_total : 0.0;

        pts_total.emplace_back(row.N, row.G_total);
        pts_kdv.emplace_back(row.N, row.G_kdv);
        if (pts_total.size() >= 3)
            row.slope_so_far = fit_loglog(pts_total).slope;
        else if (pts_total.size() == 2)
            row.slope_so_far =
                std::log(pts_total[1].second / pts_total[0].second) /
                std::log(pts_total[1].first / pts_total[0].first);
        rep.rows.push_back(row);
    }

    rep.fit_total = fit_loglog(pts_total);
    rep.fit_kdv = fit_loglog(pts_kdv);
    return rep;
}

} // namespace skdv
