// skdv: batch experiment runner for the coupled short-wave/long-wave
// spectral laboratory.
//
//   skdv <experiment> [--config file] [--set key=value ...] [--out dir] [--assert]
//
// Experiments: simulate | invariants | picard | inflate | estimates.
// Exit codes: 0 success, 2 validation error, 3 numerical blow-up,
// 4 band miss under --assert.  SKDV_THREADS caps the worker pool.

#include "CLI11.hpp"
#include "json.hpp"

#include "skdv/errors.hpp"
#include "skdv/report.hpp"
#include "skdv/runner.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"spectral laboratory for the coupled NLS-KdV system"};
    std::string experiment;
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir;
    bool assert_bands = false;

    app.add_option("experiment", experiment,
                   "simulate | invariants | picard | inflate | estimates")
        ->required();
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--set", sets, "override config entries (key=value)");
    app.add_option("--out", out_dir, "output directory (default from config)");
    app.add_flag("--assert", assert_bands, "exit 4 when a result leaves its band");

    CLI11_PARSE(app, argc, argv);

    std::string resolved_out = out_dir;
    try {
        std::map<std::string, std::string> kv;
        if (!config_path.empty())
            kv = skdv::parse_kv_file(config_path);
        kv["experiment"] = experiment;
        for (const auto& s : sets)
            skdv::apply_override(kv, s);
        skdv::ExperimentConfig cfg = skdv::config_from_map(kv);
        resolved_out = out_dir.empty() ? cfg.output_dir : out_dir;
        return skdv::run_experiment(cfg, resolved_out, assert_bands);
    } catch (const skdv::ConfigError& e) {
        nlohmann::ordered_json j;
        j["error"] = {{"field", e.field}, {"message", e.what()}};
        const std::string body = j.dump(2) + "\n";
        std::fputs(body.c_str(), stderr);
        try {
            if (!resolved_out.empty()) {
                skdv::ensure_dir(resolved_out);
                skdv::write_text_file(resolved_out + "/error.json", body);
            }
        } catch (...) {
        }
        return skdv::kExitValidation;
    } catch (const skdv::BlowupError& e) {
        std::fprintf(stderr, "blow-up at t = %g: %s\n", e.t_failure, e.what());
        return skdv::kExitBlowup;
    } catch (const skdv::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
