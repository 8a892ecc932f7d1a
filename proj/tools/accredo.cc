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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "accredo/experiment.h"
#include "accredo/kernels.h"

int main(int argc, char **argv) {
    CLI::App app{"Post-selected error mitigation with trap-based accreditation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "accredo 0.1.0");

    std::string config;
    std::string out_dir;
    std::optional<uint64_t> seed;
    size_t workers = 0;

    auto *run = app.add_subcommand("run", "Run a campaign and write runs.csv, report.json, summary.txt");
    run->add_option("config", config, "Campaign config (JSON)")->required();
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_option("--seed", seed, "Override the config seed");
    run->add_option("--workers", workers, "Worker threads (0 = all cores)");

    auto *fig2 = app.add_subcommand("fig2", "Run the error-versus-depth preset and write fig2.csv");
    fig2->add_option("preset", config, "Depth-series preset (JSON)")->required();
    fig2->add_option("--out", out_dir, "Output directory")->required();
    fig2->add_option("--seed", seed, "Override the preset seed");
    fig2->add_option("--workers", workers, "Worker threads (0 = all cores)");

    auto *validate = app.add_subcommand("validate", "Check a config or preset without running it");
    validate->add_option("config", config, "Config or preset (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : accredo::kExitConfigError;
    }

    accredo::RunOptions options{seed, workers};
    if (*run) {
        return accredo::run_experiment(config, out_dir, options);
    }
    if (*fig2) {
        return accredo::run_fig2(config, out_dir, options);
    }
    return accredo::validate_config_file(config);
}
