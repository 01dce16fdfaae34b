#pragma once

#include "skdv/estimates.hpp"
#include "skdv/params.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skdv {

enum class ExperimentKind { Simulate, Invariants, Picard, Inflate, Estimates };

std::string to_string(ExperimentKind k);
std::string to_string(EstimateKind k);

// Flat key=value configuration with dotted section names (grid.nx=512).
// Unknown keys are rejected; every field is validated before a run starts.
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Simulate;

    // grid.*
    int nx = 512;
    double L = 32.0 * M_PI;

    // time.*
    double dt = 1e-3;
    double T = 5.0;
    double delta = 0.25;

    // params.*
    SystemParams params;

    // data.* (Gaussian profiles; u may carry a lattice phase factor)
    double u_amp = 0.5;
    double u_width = 4.0;
    int u_mod_k = 0;
    double u_chirp = 0.0;
    double v_amp = 0.5;
    double v_width = 4.0;
    double v_chirp = 0.0;

    // multiplier.*
    double multiplier_N = 0.0; // 0 = beyond the lattice (identity on the grid)
    std::vector<double> multiplier_sweep = {8.0, 16.0, 32.0, 64.0};

    // picard.*
    int picard_nt = 512;
    int picard_iterations = 8;
    std::vector<double> picard_delta_list = {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125};
    std::vector<double> picard_amplitudes = {0.5, 1.0, 2.0, 4.0, 8.0};

    // inflation.*
    std::vector<double> inflation_N_list = {32.0, 64.0, 128.0, 256.0, 512.0};
    double inflation_eps0 = 1e-2;
    int inflation_n = 6;
    int quad_outer = 64;
    int quad_inner = 128;
    double slope_band = 0.3; // assert band half-width around l - 4s

    // estimates.*
    std::string estimates_family = "ensemble"; // ensemble | counterexample
    EstimateKind estimates_kind = EstimateKind::SchrodingerProduct;
    int estimates_samples = 50;
    std::vector<int> estimates_nx_list = {128, 256, 512};
    int estimates_nt = 256;
    double est_s = 0.0, est_l = -0.5;
    double est_b = 0.51, est_bp = 0.51, est_c = 0.51, est_cp = 0.51;
    std::vector<double> estimates_N_list = {32.0, 64.0, 128.0, 256.0, 512.0};

    std::uint64_t seed = 1;
    std::string output_dir = "out";

    // Canonical sorted key=value dump (config hash input; also the MANIFEST body).
    std::map<std::string, std::string> as_map() const;

    void validate() const;
};

// Parses "key = value" lines, '#' comments, blank lines allowed.
std::map<std::string, std::string> parse_kv_file(const std::string& path);
// Applies overrides of the form key=value.
void apply_override(std::map<std::string, std::string>& kv, const std::string& item);

// Builds and validates a config from keys; throws ConfigError naming the
// offending field.
ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv);

std::uint64_t fnv1a64(const std::string& bytes);

} // namespace skdv
