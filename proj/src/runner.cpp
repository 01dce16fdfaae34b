#include "skdv/runner.hpp"

#include "skdv/duhamel.hpp"
#include "skdv/errors.hpp"
#include "skdv/estimates.hpp"
#include "skdv/inflation.hpp"
#include "skdv/invariants.hpp"
#include "skdv/parallel.hpp"
#include "skdv/report.hpp"
#include "skdv/trajectory_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

namespace skdv {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_json(const std::string& path, const ordered_json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

// The identity multiplier on a grid: cutoff beyond the frequency lattice.
MultiplierSpec identity_multiplier(const Grid& g, double s) {
    return MultiplierSpec{std::max(2.0, 2.0 * g.xi_max()), s};
}

double rel_drift(const std::vector<double>& vals) {
    if (vals.empty())
        return 0.0;
    double d = 0.0;
    for (double v : vals)
        d = std::max(d, std::abs(v - vals[0]));
    const double scale = std::max(std::abs(vals[0]), 1e-30);
    return d / scale;
}

int run_simulate(const ExperimentConfig& cfg, const std::string& out,
                 bool assert_bands) {
    Grid g(cfg.nx, cfg.L);
    ComplexField u0 = ComplexField::zero(g);
    RealField v0 = RealField::zero(g);
    make_gaussian_data(cfg, g, &u0, &v0);

    const MultiplierSpec M = cfg.multiplier_N > 0.0
                                 ? MultiplierSpec{cfg.multiplier_N, cfg.params.s}
                                 : identity_multiplier(g, cfg.params.s);

    SolverConfig scfg;
    scfg.dt = cfg.dt;
    const long nsteps = std::lround(cfg.T / cfg.dt);
    scfg.record_every = std::max(1L, nsteps / 200);

    Trajectory traj = evolve(SystemState{u0, v0, 0.0}, cfg.T, scfg, cfg.params,
                             {{"mass", [](const SystemState& s) { return mass(s.u); }}});
    FunctionalReport rep = evaluate_report(traj, cfg.params, M);

    CsvWriter csv(out + "/functionals.csv",
                  {"t", "M", "L", "E", "driftL", "driftE", "N"});
    for (size_t i = 0; i < rep.t.size(); ++i)
        csv.row({fmt_g17(rep.t[i]), fmt_g17(rep.M[i]), fmt_g17(rep.L[i]),
                 fmt_g17(rep.E[i]), fmt_g17(rep.drift_L[i]), fmt_g17(rep.drift_E[i]),
                 fmt_g17(rep.N)});
    csv.close();

    if (!traj.states.empty())
        write_snapshot_file(out + "/final_state.bin", traj.states.back(), cfg.params);

    const double mass_drift = rel_drift(traj.observer_values.empty()
                                            ? std::vector<double>{}
                                            : traj.observer_values[0]);
    const double L_drift = rel_drift(rep.L);
    const double E_drift = rel_drift(rep.E);

    ordered_json j;
    j["experiment"] = "simulate";
    j["mass_drift_rel"] = mass_drift;
    j["L_drift_rel"] = L_drift;
    j["E_drift_rel"] = E_drift;
    j["v_imag_residue"] = traj.max_v_imag_residue;
    j["dt_stability_warning"] = traj.dt_stability_warning;
    j["blew_up"] = traj.blew_up;
    if (traj.blew_up)
        j["t_blowup"] = traj.t_blowup;
    write_json(out + "/summary.json", j);

    if (traj.blew_up)
        return kExitBlowup;
    if (assert_bands && mass_drift >= 1e-8)
        return kExitBandMiss;
    return kExitOk;
}

int run_invariants(const ExperimentConfig& cfg, const std::string& out,
                   bool assert_bands) {
    Grid g(cfg.nx, cfg.L);
    ComplexField u0 = ComplexField::zero(g);
    RealField v0 = RealField::zero(g);
    make_gaussian_data(cfg, g, &u0, &v0);

    SolverConfig scfg;
    scfg.dt = cfg.dt;
    const long nsteps = std::lround(cfg.delta / cfg.dt);
    scfg.record_every = std::max(1L, nsteps / 50);

    AlmostConservationResult res = almost_conservation_run(
        u0, v0, cfg.params, cfg.multiplier_sweep, cfg.delta, scfg, cfg.params.s);

    CsvWriter table(out + "/drifts.csv", {"N", "driftE", "driftL", "E0", "L0"});
    for (const auto& row : res.rows)
        table.row({fmt_g17(row.N), fmt_g17(row.drift_E), fmt_g17(row.drift_L),
                   fmt_g17(row.E0), fmt_g17(row.L0)});
    table.close();

    CsvWriter funcs(out + "/functionals.csv",
                    {"t", "M", "L", "E", "driftL", "driftE", "N"});
    for (double N : cfg.multiplier_sweep) {
        FunctionalReport rep = evaluate_report(res.trajectory, cfg.params,
                                               MultiplierSpec{N, cfg.params.s});
        for (size_t i = 0; i < rep.t.size(); ++i)
            funcs.row({fmt_g17(rep.t[i]), fmt_g17(rep.M[i]), fmt_g17(rep.L[i]),
                       fmt_g17(rep.E[i]), fmt_g17(rep.drift_L[i]),
                       fmt_g17(rep.drift_E[i]), fmt_g17(rep.N)});
    }
    funcs.close();

    bool monotone = true;
    for (size_t i = 0; i + 1 < res.rows.size(); ++i)
        if (res.rows[i + 1].drift_E > 1.5 * res.rows[i].drift_E)
            monotone = false;

    ordered_json j;
    j["experiment"] = "invariants";
    j["delta"] = cfg.delta;
    j["drift_E_monotone_within_band"] = monotone;
    j["blew_up"] = res.trajectory.blew_up;
    ordered_json rows = ordered_json::array();
    for (const auto& row : res.rows)
        rows.push_back({{"N", row.N},
                        {"driftE", row.drift_E},
                        {"driftL", row.drift_L}});
    j["rows"] = rows;
    write_json(out + "/summary.json", j);

    if (res.trajectory.blew_up)
        return kExitBlowup;
    if (assert_bands && !monotone)
        return kExitBandMiss;
    return kExitOk;
}

int run_picard(const ExperimentConfig& cfg, const std::string& out,
               bool assert_bands) {
    Grid g(cfg.nx, cfg.L);
    ComplexField u0 = ComplexField::zero(g);
    RealField v0 = RealField::zero(g);
    make_gaussian_data(cfg, g, &u0, &v0);

    const double dt_lattice = 4.0 / cfg.picard_nt; // stored window [-2, 2)
    ContractionProbe probe = picard_contraction_probe(
        u0, v0, cfg.params, cfg.picard_delta_list, cfg.picard_amplitudes,
        cfg.picard_nt, dt_lattice, cfg.picard_iterations);

    CsvWriter csv(out + "/contraction.csv",
                  {"amplitude", "delta", "contracted", "final_ratio"});
    for (const auto& cell : probe.cells)
        csv.row({fmt_g17(cell.amplitude), fmt_g17(cell.delta),
                 cell.contracted ? "1" : "0", fmt_g17(cell.final_ratio)});
    csv.close();

    ordered_json j;
    j["experiment"] = "picard";
    j["conclusive"] = probe.conclusive;
    ordered_json stars = ordered_json::array();
    for (const auto& s : probe.stars)
        stars.push_back({{"amplitude", s.amplitude},
                         {"delta_star", s.found ? s.delta_star : 0.0},
                         {"found", s.found}});
    j["stars"] = stars;
    if (probe.power) {
        j["power_slope"] = probe.power->slope;
        j["power_stderr"] = probe.power->stderr_slope;
    }
    write_json(out + "/summary.json", j);

    if (assert_bands && (!probe.power || !(probe.power->slope < 0.0)))
        return kExitBandMiss;
    return kExitOk;
}

int run_inflate(const ExperimentConfig& cfg, const std::string& out,
                bool assert_bands) {
    InflationReport rep = inflation_experiment(
        cfg.params.s, cfg.params.l, cfg.inflation_N_list, cfg.inflation_eps0,
        cfg.inflation_n, cfg.quad_outer, cfg.quad_inner, cfg.params.gamma);

    CsvWriter csv(out + "/inflation.csv",
                  {"N", "k", "G_total", "G_nls_term", "G_kdv_term", "slope_so_far"});
    for (const auto& row : rep.rows)
        csv.row({fmt_g17(row.N), std::to_string(row.k), fmt_g17(row.G_total),
                 fmt_g17(row.G_nls), fmt_g17(row.G_kdv), fmt_g17(row.slope_so_far)});
    csv.close();

    double quad_worst = 0.0;
    for (const auto& row : rep.rows)
        quad_worst = std::max(quad_worst, row.quad_rel_change);

    ordered_json j;
    j["experiment"] = "inflate";
    j["slope"] = rep.fit_total.slope;
    j["stderr"] = rep.fit_total.stderr_slope;
    j["kdv_slope"] = rep.fit_kdv.slope;
    j["phase_min"] = rep.phase_min;
    j["quad_max_rel_change"] = quad_worst;
    j["config"] = {{"s", rep.s},         {"l", rep.l},
                   {"eps0", rep.eps0},   {"n", rep.n},
                   {"gamma", rep.gamma}, {"quad_outer", rep.quad_outer},
                   {"quad_inner", rep.quad_inner}};
    write_json(out + "/summary.json", j);

    if (assert_bands) {
        const double target = cfg.params.l - 4.0 * cfg.params.s;
        const bool slope_ok = std::abs(rep.fit_total.slope - target) <= cfg.slope_band;
        const bool kdv_ok = rep.fit_kdv.slope <= -0.5 * cfg.inflation_n + 0.5;
        const bool phase_ok = rep.phase_min > 0.5;
        if (!slope_ok || !kdv_ok || !phase_ok)
            return kExitBandMiss;
    }
    return kExitOk;
}

struct EnsembleDraw {
    LocalizedBand a, b, c;
};

// Band parameters drawn per member, independent of the resolution so the
// same member sees the same continuum field on every grid.
EnsembleDraw draw_bands(EstimateKind kind, Rng& rng) {
    auto band = [&rng](Dispersion d, double cmax, double wmax) {
        LocalizedBand b;
        const double center = (2.0 * rng.uniform01() - 1.0) * cmax;
        const double hw = 0.3 + rng.uniform01() * (wmax - 0.3);
        b.xi_lo = center - hw;
        b.xi_hi = center + hw;
        b.mod_halfwidth = 2.0 + 10.0 * rng.uniform01();
        b.dispersion = d;
        return b;
    };
    EnsembleDraw d;
    switch (kind) {
    case EstimateKind::SchrodingerProduct:
        d.a = band(Dispersion::Schrodinger, 1.6, 0.8);
        d.b = band(Dispersion::Airy, 1.6, 0.8);
        break;
    case EstimateKind::KdvOutput:
        d.a = band(Dispersion::Schrodinger, 1.6, 0.8);
        d.b = band(Dispersion::Schrodinger, 1.6, 0.8);
        break;
    case EstimateKind::KdvProduct:
        d.a = band(Dispersion::Airy, 1.6, 0.8);
        d.b = band(Dispersion::Airy, 1.6, 0.8);
        break;
    case EstimateKind::NlsTrilinear:
        d.a = band(Dispersion::Schrodinger, 1.0, 0.6);
        d.b = band(Dispersion::Schrodinger, 1.0, 0.6);
        d.c = band(Dispersion::Schrodinger, 1.0, 0.6);
        break;
    }
    return d;
}

EstimateCase case_from_config(const ExperimentConfig& cfg, int nx) {
    EstimateCase c;
    c.kind = cfg.estimates_kind;
    c.s = cfg.est_s;
    c.l = cfg.est_l;
    c.b = cfg.est_b;
    c.bp = cfg.est_bp;
    c.c = cfg.est_c;
    c.cp = cfg.est_cp;
    c.resolution.nx = nx;
    c.resolution.nt = cfg.estimates_nt;
    c.resolution.L = 8.0 * M_PI;
    c.resolution.T = 4.0;
    return c;
}

int run_estimates(const ExperimentConfig& cfg, const std::string& out,
                  bool assert_bands) {
    ordered_json j;
    j["experiment"] = "estimates";
    j["family"] = cfg.estimates_family;

    if (cfg.estimates_family == "counterexample") {
        EstimateCase c = case_from_config(cfg, cfg.estimates_nx_list.front());
        c.kind = EstimateKind::KdvOutput;
        std::vector<CounterexampleResult> results(cfg.estimates_N_list.size());
        parallel_for(static_cast<int>(cfg.estimates_N_list.size()), [&](int i) {
            results[i] = counterexample_family(cfg.estimates_N_list[i], c);
        });
        CsvWriter csv(out + "/counterexample.csv",
                      {"N", "lhs", "norm_u1", "norm_u2", "ratio", "growth"});
        double growth_min = 1e300;
        std::vector<std::pair<double, double>> pts;
        for (size_t i = 0; i < results.size(); ++i) {
            const double growth =
                (i == 0) ? 0.0 : results[i].ratio / results[i - 1].ratio;
            if (i > 0)
                growth_min = std::min(growth_min, growth);
            csv.row({fmt_g17(results[i].N), fmt_g17(results[i].lhs),
                     fmt_g17(results[i].norm_u1), fmt_g17(results[i].norm_u2),
                     fmt_g17(results[i].ratio), fmt_g17(growth)});
            pts.emplace_back(results[i].N, results[i].ratio);
        }
        csv.close();
        j["growth_min"] = growth_min;
        if (pts.size() >= 3) {
            const FitResult f = fit_loglog(pts);
            j["fitted_exponent"] = f.slope; // logged, not acceptance-gated
        }
        double q1max = 0.0;
        for (const auto& r : results)
            q1max = std::max(q1max, r.max_abs_q1);
        j["max_abs_q1"] = q1max;
        write_json(out + "/summary.json", j);
        if (assert_bands && cfg.est_l > 4.0 * cfg.est_s && growth_min < 1.5)
            return kExitBandMiss;
        return kExitOk;
    }

    // ensemble family
    CsvWriter csv(out + "/ratios.csv", {"case", "nx", "sample", "lhs", "rhs", "ratio"});
    ordered_json per_res = ordered_json::array();
    std::vector<double> max_ratios;
    const std::string case_id = to_string(cfg.estimates_kind);
    for (int nx : cfg.estimates_nx_list) {
        const EstimateCase c = case_from_config(cfg, nx);
        const Grid g(nx, c.resolution.L);
        const double dt = 2.0 * c.resolution.T / c.resolution.nt;
        std::vector<RatioParts> parts(cfg.estimates_samples);
        parallel_for(cfg.estimates_samples, [&](int i) {
            Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
            const EnsembleDraw bands = draw_bands(c.kind, rng);
            const SpaceTimeField A =
                make_localized_field(g, c.resolution.nt, dt, bands.a, rng);
            const SpaceTimeField B =
                make_localized_field(g, c.resolution.nt, dt, bands.b, rng);
            if (c.kind == EstimateKind::NlsTrilinear) {
                const SpaceTimeField C =
                    make_localized_field(g, c.resolution.nt, dt, bands.c, rng);
                parts[i] = trilinear_parts(c, A, B, C);
            } else {
                parts[i] = bilinear_parts(c, A, B);
            }
        });
        std::vector<double> ratios;
        for (int i = 0; i < cfg.estimates_samples; ++i) {
            csv.row({case_id, std::to_string(nx), std::to_string(i),
                     fmt_g17(parts[i].lhs), fmt_g17(parts[i].rhs),
                     fmt_g17(parts[i].ratio)});
            ratios.push_back(parts[i].ratio);
        }
        std::vector<double> sorted = ratios;
        std::sort(sorted.begin(), sorted.end());
        const double maxr = sorted.back();
        const double median = sorted[sorted.size() / 2];
        max_ratios.push_back(maxr);
        per_res.push_back({{"nx", nx}, {"max_ratio", maxr}, {"median_ratio", median}});
    }
    csv.close();

    const double hi = *std::max_element(max_ratios.begin(), max_ratios.end());
    const double lo = *std::min_element(max_ratios.begin(), max_ratios.end());
    j["per_resolution"] = per_res;
    j["max_ratio_variation"] = (lo > 0.0) ? hi / lo : 0.0;
    write_json(out + "/summary.json", j);

    if (assert_bands && !(lo > 0.0 && hi / lo < 2.0))
        return kExitBandMiss;
    return kExitOk;
}

} // namespace

void make_gaussian_data(const ExperimentConfig& cfg, const Grid& g,
                        ComplexField* u0, RealField* v0) {
    std::vector<cplx> uv(g.nx());
    std::vector<double> vv(g.nx());
    const double ku = g.xi(g.index_of_mode(cfg.u_mod_k));
    for (int j = 0; j < g.nx(); ++j) {
        const double x = g.x(j);
        const double gu = cfg.u_amp * std::exp(-x * x / (2.0 * cfg.u_width * cfg.u_width));
        uv[j] = gu * std::exp(cplx(0.0, ku * x + cfg.u_chirp * x * x));
        vv[j] = cfg.v_amp * std::exp(-x * x / (2.0 * cfg.v_width * cfg.v_width)) *
                std::cos(cfg.v_chirp * x * x);
    }
    *u0 = ComplexField::from_samples(g, std::move(uv));
    *v0 = RealField::from_samples(g, std::move(vv));

    // The periodic box stands in for the line; the data must have decayed at
    // the boundary.
    const double peak = std::max(u0->max_abs(), v0->max_abs());
    if (peak > 0.0) {
        const double edge = std::max(u0->boundary_abs(), v0->boundary_abs());
        if (edge > 1e-12 * peak)
            throw ConfigError("grid.L",
                              "initial data does not decay below 1e-12 of peak at "
                              "the box boundary; enlarge L or narrow the data");
    }
}

int run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                   bool assert_bands) {
    cfg.validate();
    ensure_dir(out_dir);
    write_manifest(out_dir, cfg);
    switch (cfg.experiment) {
    case ExperimentKind::Simulate:
        return run_simulate(cfg, out_dir, assert_bands);
    case ExperimentKind::Invariants:
        return run_invariants(cfg, out_dir, assert_bands);
    case ExperimentKind::Picard:
        return run_picard(cfg, out_dir, assert_bands);
    case ExperimentKind::Inflate:
        return run_inflate(cfg, out_dir, assert_bands);
    case ExperimentKind::Estimates:
        return run_estimates(cfg, out_dir, assert_bands);
    }
    return kExitValidation;
}

} // namespace skdv
