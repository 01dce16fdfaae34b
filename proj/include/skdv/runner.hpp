#pragma once

#include "skdv/config.hpp"

#include <string>

namespace skdv {

// Exit codes: 0 success, 2 validation error, 3 numerical blow-up,
// 4 acceptance-band miss under assert_bands.
enum ExitCode {
    kExitOk = 0,
    kExitValidation = 2,
    kExitBlowup = 3,
    kExitBandMiss = 4,
};

// Dispatches to the experiment named by the config, writes CSV/JSON reports
// and a MANIFEST into out_dir.  Identical config + seed reproduce CSV bodies
// byte for byte.
int run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                   bool assert_bands = false);

// Builds the Gaussian data profiles an experiment starts from.
void make_gaussian_data(const ExperimentConfig& cfg, const Grid& g,
                        ComplexField* u0, RealField* v0);

} // namespace skdv
