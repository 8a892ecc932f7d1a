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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "accredo/mitigation.h"
#include "json.hpp"

namespace accredo {

using Json = nlohmann::json;

inline constexpr const char *kSchemaVersion = "accredo/1";

/// Configuration problem. what() starts with the offending field path, or
/// with "line:column" for syntax errors.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses JSON text, reporting syntax errors by line and column.
Json parse_json(const std::string &text);

/// Reads and parses a file. Messages are prefixed with the path.
Json load_json_file(const std::string &path);

/// Renders x with 12 significant digits ("%.12g").
std::string format_double(double x);

/// Circuit document: {"qubits": n, "layers": [...]} or {"ansatz": {"qubits": n, "layers": L}}.
LayeredCircuit circuit_from_json(const Json &j, const std::string &field = "target");
Json circuit_to_json(const LayeredCircuit &c);

/// {"p": 0.01} is global depolarizing, "qubits" restricts the support, and
/// "paulis": [["XI", 0.5], ...] selects an explicit distribution.
FaultSpec fault_from_json(const Json &j, size_t n, const std::string &field);
Json fault_to_json(const FaultSpec &f);

/// Noise behaviour before it is attached to a circuit. Templates describe the
/// noise at every location and can be bound to circuits of any depth.
struct BehaviourTemplate {
    enum class Kind : uint8_t { GlobalDepolarizing, Uniform, Explicit };
    int label = 1;
    Kind kind = Kind::GlobalDepolarizing;
    double p_err = 0;
    FaultSpec uniform;
    NoiseBehaviour explicit_behaviour;

    /// Throws ConfigError if an explicit behaviour does not fit c.
    NoiseBehaviour bind(const LayeredCircuit &c) const;
};

/// Accepts a list of entries, each one of
///   {"global_depolarizing": p_err}
///   {"every_location": fault}
///   {"prep": fault, "type_one": [fault...], "type_two": [fault...], "meas": fault}
/// with an optional "label" (default: 1-based position).
std::vector<BehaviourTemplate> behaviour_templates_from_json(const Json &j, size_t n,
                                                             const std::string &field = "behaviours");
BehaviourSet bind_behaviours(const std::vector<BehaviourTemplate> &templates, const LayeredCircuit &c);

/// Trap count and Hoeffding parameter resolved from "traps", "alpha" and
/// "theta". With only traps, theta follows from alpha (default 0.95).
struct TrapParameters {
    size_t traps = 0;
    double theta = 1;
};
TrapParameters trap_parameters_from_json(const Json &root);

/// {"mode": "tvd_bound", "epsilon": e, "conservative": true} or
/// {"mode": "trap_cutoff", "cutoff": t}.
AcceptanceMode acceptance_from_json(const Json &j, double theta, const std::string &field = "acceptance");
Json acceptance_to_json(const AcceptanceMode &mode);

/// Full campaign configuration document.
CampaignConfig campaign_from_json(const Json &root);

/// Per-run CSV with a header row. Column order is fixed.
void write_runs_csv(std::ostream &out, const std::vector<RunRecord> &records);
std::string runs_csv_header();

Json report_to_json(const MitigationReport &report, const CampaignConfig &cfg, const std::string &runs_csv_path);

/// Human-readable summary table.
std::string summary_text(const MitigationReport &report);

}  // namespace accredo
