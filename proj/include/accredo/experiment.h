// Copyright 2026 The Accredo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "accredo/io.h"
#include "accredo/mitigation.h"

namespace accredo {

/// Process exit statuses shared by the command line tool.
enum ExitStatus : int {
    kExitOk = 0,
    kExitIoError = 1,
    kExitConfigError = 2,
    kExitNoAcceptedRuns = 3,
};

/// An explicit flag wins over ACCREDO_SEED, which wins over the config seed.
/// Throws ConfigError if env_value is set but not an unsigned integer.
uint64_t resolve_seed(std::optional<uint64_t> flag, const char *env_value, uint64_t config_seed);

struct RunOptions {
    std::optional<uint64_t> seed;
    size_t workers = 0;
};

/// Runs the campaign described by a config file and writes its artifacts
/// into out_dir (created if needed). Diagnostics go to stderr.
int run_experiment(const std::string &config_path, const std::string &out_dir, const RunOptions &options);

/// Depth series of campaigns on the brickwork ansatz.
struct ExperimentPreset {
    std::string name = "fig2";
    std::vector<size_t> layer_counts;
    size_t num_qubits = 4;
    size_t traps = 15;
    size_t runs = 750;
    double theta = 1;
    /// Template mode. For trap_cutoff the cutoff is taken from cutoffs[d].
    AcceptanceMode mode;
    std::vector<size_t> cutoffs;
    std::vector<BehaviourTemplate> behaviours;
    uint64_t seed = 0;
};

/// Throws ConfigError describing the first problem.
void validate_preset(const ExperimentPreset &preset);

ExperimentPreset preset_from_json(const Json &root);

struct DepthRow {
    size_t depth = 0;
    double ideal_avg = 0;
    double raw_avg = 0;
    std::optional<double> postselected_avg;
    double e_abs_raw = 0;
    std::optional<double> e_abs_postselected;
    size_t accepted = 0;
    size_t runs = 0;
    MitigationReport report;
};

/// Mean over qubits of <Z_q> on one bitstring, i.e. mean of (1 - 2 s_q).
double mean_z(const Bitstring &bits);

/// Runs one campaign per depth with observable Z...Z. Each run's target
/// bitstring gives every qubit's Z value, averaged over qubits and then over
/// the accepted runs (post-selected) or all runs (raw). E_abs is the distance
/// to the exact ideal average. Depth d uses seed derive_seed(seed, d).
std::vector<DepthRow> fig2_experiment(const ExperimentPreset &preset, size_t workers = 0);

/// depth,e_abs_raw,e_abs_postselected,m,K; an undefined post-selected value
/// is left empty.
std::string fig2_csv(const std::vector<DepthRow> &rows);

/// Loads a preset, runs fig2_experiment and writes fig2.csv and summary.txt.
int run_fig2(const std::string &preset_path, const std::string &out_dir, const RunOptions &options);

/// Loads and checks a campaign config or a depth-series preset without
/// running it.
int validate_config_file(const std::string &config_path);

}  // namespace accredo
