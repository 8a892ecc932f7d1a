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

#include "accredo/experiment.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "accredo/statevector.h"

namespace accredo {

namespace {

bool write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) {
        std::cerr << "error: cannot write " << path.string() << '\n';
        return false;
    }
    return true;
}

bool prepare_dir(const std::string &out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << '\n';
        return false;
    }
    return true;
}

size_t preset_count(const Json &j, const char *key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ConfigError(std::string(key) + ": missing");
    }
    if (!it->is_number_unsigned()) {
        throw ConfigError(std::string(key) + ": expected a nonnegative integer");
    }
    return it->get<size_t>();
}

}  // namespace

uint64_t resolve_seed(std::optional<uint64_t> flag, const char *env_value, uint64_t config_seed) {
    if (flag) {
        return *flag;
    }
    if (env_value != nullptr && *env_value != '\0') {
        std::string_view text(env_value);
        uint64_t value = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || end != text.data() + text.size()) {
            throw ConfigError("ACCREDO_SEED: expected an unsigned 64-bit integer, got '" + std::string(text) + "'");
        }
        return value;
    }
    return config_seed;
}

int run_experiment(const std::string &config_path, const std::string &out_dir, const RunOptions &options) {
    CampaignConfig cfg;
    try {
        Json root = load_json_file(config_path);
        try {
            cfg = campaign_from_json(root);
        } catch (const ConfigError &e) {
            throw ConfigError(config_path + ": " + e.what());
        }
        cfg.seed = resolve_seed(options.seed, std::getenv("ACCREDO_SEED"), cfg.seed);
        validate_campaign(cfg);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    if (!prepare_dir(out_dir)) {
        return kExitIoError;
    }
    MitigationReport report = run_campaign(cfg, options.workers);

    std::filesystem::path dir(out_dir);
    std::ostringstream csv;
    write_runs_csv(csv, report.records);
    Json doc = report_to_json(report, cfg, "runs.csv");
    if (!write_file(dir / "runs.csv", csv.str()) || !write_file(dir / "report.json", doc.dump(2) + "\n") ||
        !write_file(dir / "summary.txt", summary_text(report))) {
        return kExitIoError;
    }
    std::cout << summary_text(report);
    if (!report.o_mit_hat) {
        std::cerr << "status: no accepted runs\n";
        return kExitNoAcceptedRuns;
    }
    return kExitOk;
}

void validate_preset(const ExperimentPreset &preset) {
    if (preset.layer_counts.empty()) {
        throw ConfigError("layer_counts: empty");
    }
    for (size_t k = 0; k < preset.layer_counts.size(); ++k) {
        size_t d = preset.layer_counts[k];
        if (d == 0 || d % 2 == 0) {
            throw ConfigError("layer_counts[" + std::to_string(k) + "]: " + std::to_string(d) +
                              " is not an odd positive integer");
        }
    }
    if (preset.num_qubits == 0 || preset.num_qubits > kMaxDenseQubits) {
        throw ConfigError("qubits: must lie in [1," + std::to_string(kMaxDenseQubits) + "]");
    }
    if (preset.runs == 0) {
        throw ConfigError("runs: must be at least 1");
    }
    if (preset.traps == 0) {
        throw ConfigError("traps: must be at least 1");
    }
    if (preset.mode.kind == AcceptanceMode::Kind::TrapCutoff &&
        preset.cutoffs.size() != preset.layer_counts.size()) {
        throw ConfigError("acceptance.cutoffs: has " + std::to_string(preset.cutoffs.size()) + " entries for " +
                          std::to_string(preset.layer_counts.size()) + " depths");
    }
    if (preset.behaviours.empty()) {
        throw ConfigError("behaviours: behaviour set is empty");
    }
}

ExperimentPreset preset_from_json(const Json &root) {
    if (!root.is_object()) {
        throw ConfigError("preset: expected an object");
    }
    auto schema = root.find("schema");
    if (schema == root.end() || *schema != kSchemaVersion) {
        throw ConfigError(std::string("schema: expected ") + kSchemaVersion);
    }
    ExperimentPreset preset;
    if (root.contains("name")) {
        if (!root["name"].is_string()) {
            throw ConfigError("name: expected a string");
        }
        preset.name = root["name"].get<std::string>();
    }
    auto depths = root.find("layer_counts");
    if (depths == root.end() || !depths->is_array()) {
        throw ConfigError("layer_counts: expected an array");
    }
    for (size_t k = 0; k < depths->size(); ++k) {
        if (!(*depths)[k].is_number_unsigned()) {
            throw ConfigError("layer_counts[" + std::to_string(k) + "]: expected a nonnegative integer");
        }
        preset.layer_counts.push_back((*depths)[k].get<size_t>());
    }
    preset.num_qubits = preset_count(root, "qubits");
    preset.runs = preset_count(root, "runs");
    TrapParameters traps = trap_parameters_from_json(root);
    preset.traps = traps.traps;
    preset.theta = traps.theta;

    auto acceptance = root.find("acceptance");
    if (acceptance == root.end() || !acceptance->is_object()) {
        throw ConfigError("acceptance: expected an object");
    }
    Json mode = *acceptance;
    if (mode.value("mode", "") == "trap_cutoff" && mode.contains("cutoffs")) {
        const Json &list = mode["cutoffs"];
        if (!list.is_array()) {
            throw ConfigError("acceptance.cutoffs: expected an array");
        }
        for (size_t k = 0; k < list.size(); ++k) {
            if (!list[k].is_number_unsigned()) {
                throw ConfigError("acceptance.cutoffs[" + std::to_string(k) + "]: expected a nonnegative integer");
            }
            preset.cutoffs.push_back(list[k].get<size_t>());
        }
        mode.erase("cutoffs");
        mode["cutoff"] = 0;
    }
    preset.mode = acceptance_from_json(mode, preset.theta);
    if (preset.mode.kind == AcceptanceMode::Kind::TrapCutoff && preset.cutoffs.empty()) {
        preset.cutoffs.assign(preset.layer_counts.size(), preset.mode.cutoff);
    }
    auto behaviours = root.find("behaviours");
    if (behaviours == root.end()) {
        throw ConfigError("behaviours: missing");
    }
    preset.behaviours = behaviour_templates_from_json(*behaviours, preset.num_qubits);
    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned()) {
            throw ConfigError("seed: expected a nonnegative integer");
        }
        preset.seed = root["seed"].get<uint64_t>();
    }
    validate_preset(preset);
    return preset;
}

double mean_z(const Bitstring &bits) {
    if (bits.empty()) {
        throw std::invalid_argument("mean_z of an empty bitstring");
    }
    long long total = 0;
    for (uint8_t b : bits) {
        total += b ? -1 : 1;
    }
    return static_cast<double>(total) / static_cast<double>(bits.size());
}

std::vector<DepthRow> fig2_experiment(const ExperimentPreset &preset, size_t workers) {
    validate_preset(preset);
    const size_t n = preset.num_qubits;
    std::vector<DepthRow> rows;
    for (size_t d = 0; d < preset.layer_counts.size(); ++d) {
        DepthRow row;
        row.depth = preset.layer_counts[d];
        CampaignConfig cfg;
        cfg.target = ansatz_fig1(n, row.depth);
        cfg.observable = PauliObservable(std::string(n, 'Z'));
        cfg.runs = preset.runs;
        cfg.traps = preset.traps;
        cfg.mode = preset.mode;
        if (preset.mode.kind == AcceptanceMode::Kind::TrapCutoff) {
            cfg.mode.cutoff = preset.cutoffs[d];
        }
        cfg.behaviours = bind_behaviours(preset.behaviours, cfg.target);
        cfg.seed = derive_seed(preset.seed, row.depth);
        row.report = run_campaign(cfg, workers);

        std::vector<double> ideal = ideal_distribution(cfg.target);
        for (uint64_t i = 0; i < ideal.size(); ++i) {
            row.ideal_avg += ideal[i] * mean_z(bits_from_index(i, n));
        }
        // Sums of integer per-qubit totals keep the averages order independent.
        long long raw_total = 0;
        long long accepted_total = 0;
        for (const RunRecord &r : row.report.records) {
            long long z = 0;
            for (uint8_t b : r.target_bits) {
                z += b ? -1 : 1;
            }
            raw_total += z;
            if (r.accepted) {
                accepted_total += z;
            }
        }
        const double qubits = static_cast<double>(n);
        row.runs = row.report.runs;
        row.accepted = row.report.accepted;
        row.raw_avg = static_cast<double>(raw_total) / (qubits * static_cast<double>(row.runs));
        row.e_abs_raw = std::abs(row.ideal_avg - row.raw_avg);
        if (row.accepted > 0) {
            row.postselected_avg = static_cast<double>(accepted_total) / (qubits * static_cast<double>(row.accepted));
            row.e_abs_postselected = std::abs(row.ideal_avg - *row.postselected_avg);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string fig2_csv(const std::vector<DepthRow> &rows) {
    std::ostringstream out;
    out << "depth,e_abs_raw,e_abs_postselected,m,K\n";
    for (const DepthRow &r : rows) {
        out << r.depth << ',' << format_double(r.e_abs_raw) << ','
            << (r.e_abs_postselected ? format_double(*r.e_abs_postselected) : "") << ',' << r.accepted << ','
            << r.runs << '\n';
    }
    return out.str();
}

int run_fig2(const std::string &preset_path, const std::string &out_dir, const RunOptions &options) {
    ExperimentPreset preset;
    try {
        Json root = load_json_file(preset_path);
        try {
            preset = preset_from_json(root);
        } catch (const ConfigError &e) {
            throw ConfigError(preset_path + ": " + e.what());
        }
        preset.seed = resolve_seed(options.seed, std::getenv("ACCREDO_SEED"), preset.seed);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    if (!prepare_dir(out_dir)) {
        return kExitIoError;
    }
    std::vector<DepthRow> rows = fig2_experiment(preset, options.workers);
    std::ostringstream summary;
    summary << "preset " << preset.name << ": " << preset.num_qubits << " qubits, M = " << preset.traps
            << ", K = " << preset.runs << ", " << preset.mode.name() << '\n';
    summary << "depth  ideal            raw              postselected     m\n";
    bool any_empty = false;
    for (const DepthRow &r : rows) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-6zu %-16s %-16s %-16s %zu\n", r.depth, format_double(r.ideal_avg).c_str(),
                      format_double(r.raw_avg).c_str(),
                      r.postselected_avg ? format_double(*r.postselected_avg).c_str() : "undefined", r.accepted);
        summary << line;
        any_empty |= r.accepted == 0;
    }
    std::filesystem::path dir(out_dir);
    if (!write_file(dir / "fig2.csv", fig2_csv(rows)) || !write_file(dir / "summary.txt", summary.str())) {
        return kExitIoError;
    }
    std::cout << summary.str();
    if (any_empty) {
        std::cerr << "status: no accepted runs at one or more depths\n";
        return kExitNoAcceptedRuns;
    }
    return kExitOk;
}

int validate_config_file(const std::string &config_path) {
    try {
        Json root = load_json_file(config_path);
        try {
            if (root.is_object() && root.contains("layer_counts")) {
                ExperimentPreset preset = preset_from_json(root);
                std::cout << config_path << ": valid preset with " << preset.layer_counts.size() << " depths\n";
            } else {
                CampaignConfig cfg = campaign_from_json(root);
                validate_campaign(cfg);
                std::cout << config_path << ": valid config, " << cfg.target.num_qubits << " qubits, "
                          << cfg.target.layers.size() << " layers, K = " << cfg.runs << ", M = " << cfg.traps
                          << ", N = " << cfg.behaviours.size() << '\n';
            }
        } catch (const ConfigError &e) {
            throw ConfigError(config_path + ": " + e.what());
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return kExitOk;
}

}  // namespace accredo
