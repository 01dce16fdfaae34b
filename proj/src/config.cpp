#include "skdv/config.hpp"

#include "skdv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace skdv {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& val) {
    try {
        size_t pos = 0;
        const double x = std::stod(val, &pos);
        if (pos != val.size())
            throw std::invalid_argument(val);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "not a number: '" + val + "'");
    }
}

long long parse_int(const std::string& key, const std::string& val) {
    try {
        size_t pos = 0;
        const long long x = std::stoll(val, &pos);
        if (pos != val.size())
            throw std::invalid_argument(val);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "not an integer: '" + val + "'");
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& val) {
    std::vector<double> out;
    std::stringstream ss(val);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(parse_double(key, item));
    }
    if (out.empty())
        throw ConfigError(key, "empty list");
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_list(const std::vector<double>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ",";
        out += fmt(xs[i]);
    }
    return out;
}

std::string fmt_list(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

EstimateKind parse_estimate_kind(const std::string& v) {
    if (v == "schrodinger-product")
        return EstimateKind::SchrodingerProduct;
    if (v == "kdv-output")
        return EstimateKind::KdvOutput;
    if (v == "kdv-product")
        return EstimateKind::KdvProduct;
    if (v == "nls-trilinear")
        return EstimateKind::NlsTrilinear;
    throw ConfigError("estimates.kind", "unknown kind '" + v + "'");
}

} // namespace

std::string to_string(ExperimentKind k) {
    switch (k) {
    case ExperimentKind::Simulate:
        return "simulate";
    case ExperimentKind::Invariants:
        return "invariants";
    case ExperimentKind::Picard:
        return "picard";
    case ExperimentKind::Inflate:
        return "inflate";
    case ExperimentKind::Estimates:
        return "estimates";
    }
    return "?";
}

std::string to_string(EstimateKind k) {
    switch (k) {
    case EstimateKind::SchrodingerProduct:
        return "schrodinger-product";
    case EstimateKind::KdvOutput:
        return "kdv-output";
    case EstimateKind::KdvProduct:
        return "kdv-product";
    case EstimateKind::NlsTrilinear:
        return "nls-trilinear";
    }
    return "?";
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        const auto pos = t.find('=');
        if (pos == std::string::npos)
            throw ConfigError("config", "line " + std::to_string(lineno) +
                                            ": expected key=value");
        kv[trim(t.substr(0, pos))] = trim(t.substr(pos + 1));
    }
    return kv;
}

void apply_override(std::map<std::string, std::string>& kv, const std::string& item) {
    const auto pos = item.find('=');
    if (pos == std::string::npos)
        throw ConfigError("--set", "expected key=value, got '" + item + "'");
    kv[trim(item.substr(0, pos))] = trim(item.substr(pos + 1));
}

ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv) {
    ExperimentConfig cfg;
    for (const auto& [key, val] : kv) {
        if (key == "experiment") {
            if (val == "simulate")
                cfg.experiment = ExperimentKind::Simulate;
            else if (val == "invariants")
                cfg.experiment = ExperimentKind::Invariants;
            else if (val == "picard")
                cfg.experiment = ExperimentKind::Picard;
            else if (val == "inflate")
                cfg.experiment = ExperimentKind::Inflate;
            else if (val == "estimates")
                cfg.experiment = ExperimentKind::Estimates;
            else
                throw ConfigError(key, "unknown experiment '" + val + "'");
        } else if (key == "grid.nx")
            cfg.nx = static_cast<int>(parse_int(key, val));
        else if (key == "grid.L")
            cfg.L = parse_double(key, val);
        else if (key == "time.dt")
            cfg.dt = parse_double(key, val);
        else if (key == "time.T")
            cfg.T = parse_double(key, val);
        else if (key == "time.delta")
            cfg.delta = parse_double(key, val);
        else if (key == "params.alpha")
            cfg.params.alpha = parse_double(key, val);
        else if (key == "params.beta")
            cfg.params.beta = parse_double(key, val);
        else if (key == "params.gamma")
            cfg.params.gamma = parse_double(key, val);
        else if (key == "params.s")
            cfg.params.s = parse_double(key, val);
        else if (key == "params.l")
            cfg.params.l = parse_double(key, val);
        else if (key == "data.u_amp")
            cfg.u_amp = parse_double(key, val);
        else if (key == "data.u_width")
            cfg.u_width = parse_double(key, val);
        else if (key == "data.u_mod_k")
            cfg.u_mod_k = static_cast<int>(parse_int(key, val));
        else if (key == "data.u_chirp")
            cfg.u_chirp = parse_double(key, val);
        else if (key == "data.v_chirp")
            cfg.v_chirp = parse_double(key, val);
        else if (key == "data.v_amp")
            cfg.v_amp = parse_double(key, val);
        else if (key == "data.v_width")
            cfg.v_width = parse_double(key, val);
        else if (key == "multiplier.N")
            cfg.multiplier_N = parse_double(key, val);
        else if (key == "multiplier.sweep")
            cfg.multiplier_sweep = parse_list(key, val);
        else if (key == "picard.nt")
            cfg.picard_nt = static_cast<int>(parse_int(key, val));
        else if (key == "picard.iterations")
            cfg.picard_iterations = static_cast<int>(parse_int(key, val));
        else if (key == "picard.delta_list")
            cfg.picard_delta_list = parse_list(key, val);
        else if (key == "picard.amplitudes")
            cfg.picard_amplitudes = parse_list(key, val);
        else if (key == "inflation.N_list")
            cfg.inflation_N_list = parse_list(key, val);
        else if (key == "inflation.eps0")
            cfg.inflation_eps0 = parse_double(key, val);
        else if (key == "inflation.n")
            cfg.inflation_n = static_cast<int>(parse_int(key, val));
        else if (key == "inflation.quad_outer")
            cfg.quad_outer = static_cast<int>(parse_int(key, val));
        else if (key == "inflation.quad_inner")
            cfg.quad_inner = static_cast<int>(parse_int(key, val));
        else if (key == "inflation.slope_band")
            cfg.slope_band = parse_double(key, val);
        else if (key == "estimates.family")
            cfg.estimates_family = val;
        else if (key == "estimates.kind")
            cfg.estimates_kind = parse_estimate_kind(val);
        else if (key == "estimates.samples")
            cfg.estimates_samples = static_cast<int>(parse_int(key, val));
        else if (key == "estimates.nx_list") {
            cfg.estimates_nx_list.clear();
            for (double x : parse_list(key, val))
                cfg.estimates_nx_list.push_back(static_cast<int>(x));
        } else if (key == "estimates.nt")
            cfg.estimates_nt = static_cast<int>(parse_int(key, val));
        else if (key == "estimates.s")
            cfg.est_s = parse_double(key, val);
        else if (key == "estimates.l")
            cfg.est_l = parse_double(key, val);
        else if (key == "estimates.b")
            cfg.est_b = parse_double(key, val);
        else if (key == "estimates.bp")
            cfg.est_bp = parse_double(key, val);
        else if (key == "estimates.c")
            cfg.est_c = parse_double(key, val);
        else if (key == "estimates.cp")
            cfg.est_cp = parse_double(key, val);
        else if (key == "estimates.N_list")
            cfg.estimates_N_list = parse_list(key, val);
        else if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(parse_int(key, val));
        else if (key == "output_dir")
            cfg.output_dir = val;
        else
            throw ConfigError(key, "unknown key");
    }
    cfg.validate();
    return cfg;
}

void ExperimentConfig::validate() const {
    if (nx < 8 || !is_power_of_two(nx))
        throw ConfigError("grid.nx", "must be a power of two >= 8");
    if (!(L > 0.0) || !std::isfinite(L))
        throw ConfigError("grid.L", "must be positive and finite");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ConfigError("time.dt", "must be positive");
    if (!(T >= 0.0) || !std::isfinite(T))
        throw ConfigError("time.T", "must be non-negative");
    if (!(delta > 0.0))
        throw ConfigError("time.delta", "must be positive");
    if (!params.finite())
        throw ConfigError("params", "non-finite value");
    if (!(u_amp >= 0.0) || !(v_amp >= 0.0))
        throw ConfigError("data.u_amp", "amplitudes must be non-negative");
    if (!(u_width > 0.0) || !(v_width > 0.0))
        throw ConfigError("data.u_width", "widths must be positive");
    if (multiplier_N != 0.0 && multiplier_N < 2.0)
        throw ConfigError("multiplier.N", "must be >= 2 (or 0 for identity)");
    for (double N : multiplier_sweep)
        if (N < 2.0)
            throw ConfigError("multiplier.sweep", "cutoffs must be >= 2");
    if (picard_nt < 8 || !is_power_of_two(picard_nt))
        throw ConfigError("picard.nt", "must be a power of two >= 8");
    if (picard_iterations < 1)
        throw ConfigError("picard.iterations", "must be >= 1");
    if (!(inflation_eps0 > 0.0))
        throw ConfigError("inflation.eps0", "must be positive");
    if (inflation_n < 1)
        throw ConfigError("inflation.n", "must be >= 1");
    if (quad_outer < 4 || quad_inner < 4)
        throw ConfigError("inflation.quad_outer", "quadrature orders must be >= 4");
    for (double N : inflation_N_list)
        if (!(N >= 4.0))
            throw ConfigError("inflation.N_list", "cutoffs must be >= 4");
    if (estimates_family != "ensemble" && estimates_family != "counterexample")
        throw ConfigError("estimates.family", "must be ensemble or counterexample");
    if (estimates_samples < 1)
        throw ConfigError("estimates.samples", "must be >= 1");
    if (estimates_nt < 8 || !is_power_of_two(estimates_nt))
        throw ConfigError("estimates.nt", "must be a power of two >= 8");
    for (int n : estimates_nx_list)
        if (n < 8 || !is_power_of_two(n))
            throw ConfigError("estimates.nx_list", "entries must be powers of two >= 8");
    for (double m : {est_b, est_bp, est_c, est_cp})
        if (!(m > 0.0) || !(m < 1.0))
            throw ConfigError("estimates.b", "modulation indices must lie in (0, 1)");
}

std::map<std::string, std::string> ExperimentConfig::as_map() const {
    std::map<std::string, std::string> kv;
    kv["experiment"] = to_string(experiment);
    kv["grid.nx"] = std::to_string(nx);
    kv["grid.L"] = fmt(L);
    kv["time.dt"] = fmt(dt);
    kv["time.T"] = fmt(T);
    kv["time.delta"] = fmt(delta);
    kv["params.alpha"] = fmt(params.alpha);
    kv["params.beta"] = fmt(params.beta);
    kv["params.gamma"] = fmt(params.gamma);
    kv["params.s"] = fmt(params.s);
    kv["params.l"] = fmt(params.l);
    kv["data.u_amp"] = fmt(u_amp);
    kv["data.u_width"] = fmt(u_width);
    kv["data.u_mod_k"] = std::to_string(u_mod_k);
    kv["data.u_chirp"] = fmt(u_chirp);
    kv["data.v_chirp"] = fmt(v_chirp);
    kv["data.v_amp"] = fmt(v_amp);
    kv["data.v_width"] = fmt(v_width);
    kv["multiplier.N"] = fmt(multiplier_N);
    kv["multiplier.sweep"] = fmt_list(multiplier_sweep);
    kv["picard.nt"] = std::to_string(picard_nt);
    kv["picard.iterations"] = std::to_string(picard_iterations);
    kv["picard.delta_list"] = fmt_list(picard_delta_list);
    kv["picard.amplitudes"] = fmt_list(picard_amplitudes);
    kv["inflation.N_list"] = fmt_list(inflation_N_list);
    kv["inflation.eps0"] = fmt(inflation_eps0);
    kv["inflation.n"] = std::to_string(inflation_n);
    kv["inflation.quad_outer"] = std::to_string(quad_outer);
    kv["inflation.quad_inner"] = std::to_string(quad_inner);
    kv["inflation.slope_band"] = fmt(slope_band);
    kv["estimates.family"] = estimates_family;
    kv["estimates.kind"] = to_string(estimates_kind);
    kv["estimates.samples"] = std::to_string(estimates_samples);
    kv["estimates.nx_list"] = fmt_list(estimates_nx_list);
    kv["estimates.nt"] = std::to_string(estimates_nt);
    kv["estimates.s"] = fmt(est_s);
    kv["estimates.l"] = fmt(est_l);
    kv["estimates.b"] = fmt(est_b);
    kv["estimates.bp"] = fmt(est_bp);
    kv["estimates.c"] = fmt(est_c);
    kv["estimates.cp"] = fmt(est_cp);
    kv["estimates.N_list"] = fmt_list(estimates_N_list);
    kv["seed"] = std::to_string(seed);
    return kv;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace skdv
