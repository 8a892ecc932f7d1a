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

#include "accredo/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace accredo {

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &what) { throw ConfigError(field + ": " + what); }

const Json &require(const Json &j, const char *key, const std::string &field) {
    if (!j.is_object()) {
        fail(field, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail(field + "." + key, "missing");
    }
    return *it;
}

double as_number(const Json &j, const std::string &field) {
    if (!j.is_number()) {
        fail(field, "expected a number");
    }
    return j.get<double>();
}

double as_probability(const Json &j, const std::string &field) {
    double p = as_number(j, field);
    if (!(p >= 0 && p <= 1)) {
        fail(field, "probability " + format_double(p) + " outside [0,1]");
    }
    return p;
}

uint64_t as_unsigned(const Json &j, const std::string &field) {
    if (j.is_number_unsigned()) {
        return j.get<uint64_t>();
    }
    if (j.is_number_integer()) {
        if (j.get<int64_t>() >= 0) {
            return static_cast<uint64_t>(j.get<int64_t>());
        }
        fail(field, "expected a nonnegative integer, got " + j.dump());
    }
    fail(field, "expected a nonnegative integer");
}

std::string as_string(const Json &j, const std::string &field) {
    if (!j.is_string()) {
        fail(field, "expected a string");
    }
    return j.get<std::string>();
}

const Json &as_array(const Json &j, const std::string &field) {
    if (!j.is_array()) {
        fail(field, "expected an array");
    }
    return j;
}

std::string at(const std::string &field, size_t k) { return field + "[" + std::to_string(k) + "]"; }

// Rethrows library validation errors under a field path.
template <typename F>
auto with_field(const std::string &field, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        fail(field, e.what());
    } catch (const std::out_of_range &e) {
        fail(field, e.what());
    }
}

Gate gate_from_json(const Json &j, const std::string &field) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        if (name == "I") return SingleQubitClifford::identity();
        if (name == "H") return SingleQubitClifford::hadamard();
        if (name == "S") return SingleQubitClifford::phase_s();
        if (name == "X") return SingleQubitClifford::pauli(1);
        if (name == "Y") return SingleQubitClifford::pauli(2);
        if (name == "Z") return SingleQubitClifford::pauli(3);
        fail(field, "unknown gate name '" + name + "'");
    }
    if (!j.is_object()) {
        fail(field, "expected a gate name or object");
    }
    if (j.contains("clifford")) {
        uint64_t index = as_unsigned(j["clifford"], field + ".clifford");
        if (index >= static_cast<uint64_t>(SingleQubitClifford::kCount)) {
            fail(field + ".clifford", "index " + std::to_string(index) + " outside [0,23]");
        }
        return SingleQubitClifford(static_cast<int>(index));
    }
    if (j.contains("rotation")) {
        std::string axis = as_string(j["rotation"], field + ".rotation");
        if (axis != "X" && axis != "Y" && axis != "Z") {
            fail(field + ".rotation", "axis must be X, Y or Z");
        }
        return Rotation{axis[0], as_number(require(j, "angle", field), field + ".angle")};
    }
    if (j.contains("unitary")) {
        const Json &u = as_array(j["unitary"], field + ".unitary");
        if (u.size() != 8) {
            fail(field + ".unitary", "expected 8 numbers (re, im of u00 u01 u10 u11)");
        }
        Mat2 m;
        for (size_t k = 0; k < 4; ++k) {
            m[k] = Complex{as_number(u[2 * k], at(field + ".unitary", 2 * k)),
                           as_number(u[2 * k + 1], at(field + ".unitary", 2 * k + 1))};
        }
        Mat2 product = mat2_mul(mat2_adjoint(m), m);
        for (size_t k = 0; k < 4; ++k) {
            if (std::abs(product[k] - kIdentity2[k]) > 1e-9) {
                fail(field + ".unitary", "matrix is not unitary");
            }
        }
        return m;
    }
    fail(field, "expected one of clifford, rotation, unitary");
}

Json gate_to_json(const Gate &g) {
    return std::visit(
        [](const auto &op) -> Json {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, SingleQubitClifford>) {
                return Json{{"clifford", op.index()}};
            } else if constexpr (std::is_same_v<T, Rotation>) {
                return Json{{"rotation", std::string(1, op.axis)}, {"angle", op.angle}};
            } else {
                Json u = Json::array();
                for (const Complex &z : op) {
                    u.push_back(z.real());
                    u.push_back(z.imag());
                }
                return Json{{"unitary", u}};
            }
        },
        g.op());
}

// Round trip through the 12 digit rendering so JSON output matches the CSV.
Json number(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    return std::stod(format_double(x));
}

Json optional_number(const std::optional<double> &x) { return x ? number(*x) : Json(nullptr); }

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        size_t line = 1;
        size_t column = 1;
        size_t limit = std::min<size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string message = e.what();
        auto pos = message.find("parse error");
        throw ConfigError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                          (pos == std::string::npos ? message : message.substr(pos)));
    }
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_json(buffer.str());
    } catch (const ConfigError &e) {
        throw ConfigError(path + ":" + e.what());
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

LayeredCircuit circuit_from_json(const Json &j, const std::string &field) {
    if (!j.is_object()) {
        fail(field, "expected an object");
    }
    if (j.contains("ansatz")) {
        const Json &a = j["ansatz"];
        std::string f = field + ".ansatz";
        size_t n = as_unsigned(require(a, "qubits", f), f + ".qubits");
        size_t layers = as_unsigned(require(a, "layers", f), f + ".layers");
        return with_field(f, [&] { return ansatz_fig1(n, layers); });
    }
    LayeredCircuit c;
    c.num_qubits = as_unsigned(require(j, "qubits", field), field + ".qubits");
    if (c.num_qubits == 0 || c.num_qubits > kMaxDenseQubits) {
        fail(field + ".qubits", "must lie in [1," + std::to_string(kMaxDenseQubits) + "]");
    }
    const Json &layers = as_array(require(j, "layers", field), field + ".layers");
    for (size_t k = 0; k < layers.size(); ++k) {
        std::string f = at(field + ".layers", k);
        std::string type = as_string(require(layers[k], "type", f), f + ".type");
        if (type == "I") {
            const Json &edges = as_array(require(layers[k], "edges", f), f + ".edges");
            std::vector<Edge> list;
            for (size_t e = 0; e < edges.size(); ++e) {
                std::string fe = at(f + ".edges", e);
                if (!edges[e].is_array() || edges[e].size() != 2) {
                    fail(fe, "expected a pair of qubits");
                }
                list.emplace_back(static_cast<uint32_t>(as_unsigned(edges[e][0], fe)),
                                  static_cast<uint32_t>(as_unsigned(edges[e][1], fe)));
            }
            c.layers.push_back(Layer::cz(std::move(list)));
        } else if (type == "II") {
            const Json &gates = as_array(require(layers[k], "gates", f), f + ".gates");
            std::vector<Gate> list;
            for (size_t g = 0; g < gates.size(); ++g) {
                list.push_back(gate_from_json(gates[g], at(f + ".gates", g)));
            }
            c.layers.push_back(Layer::single(std::move(list)));
        } else {
            fail(f + ".type", "expected \"I\" or \"II\"");
        }
    }
    auto problems = validate_circuit(c);
    if (!problems.empty()) {
        fail(field, problems.front());
    }
    return c;
}

Json circuit_to_json(const LayeredCircuit &c) {
    Json layers = Json::array();
    for (const Layer &layer : c.layers) {
        if (layer.kind == LayerKind::TypeI) {
            Json edges = Json::array();
            for (const auto &[u, v] : layer.edges) {
                edges.push_back({u, v});
            }
            layers.push_back({{"type", "I"}, {"edges", edges}});
        } else {
            Json gates = Json::array();
            for (const Gate &g : layer.gates) {
                gates.push_back(gate_to_json(g));
            }
            layers.push_back({{"type", "II"}, {"gates", gates}});
        }
    }
    return {{"qubits", c.num_qubits}, {"layers", layers}};
}

FaultSpec fault_from_json(const Json &j, size_t n, const std::string &field) {
    if (j.is_number()) {
        return FaultSpec::depolarizing(as_probability(j, field + ".p"));
    }
    double p = as_probability(require(j, "p", field), field + ".p");
    FaultSpec spec;
    if (j.contains("paulis")) {
        const Json &list = as_array(j["paulis"], field + ".paulis");
        std::vector<std::pair<PauliString, double>> weighted;
        for (size_t k = 0; k < list.size(); ++k) {
            std::string f = at(field + ".paulis", k);
            if (!list[k].is_array() || list[k].size() != 2) {
                fail(f, "expected [pauli, weight]");
            }
            std::string text = as_string(list[k][0], f);
            PauliString pauli = with_field(f, [&] { return PauliString::from_str(text); });
            weighted.emplace_back(std::move(pauli), as_number(list[k][1], f));
        }
        spec = FaultSpec::explicit_paulis(p, std::move(weighted));
    } else {
        std::vector<uint32_t> support;
        if (j.contains("qubits")) {
            const Json &qubits = as_array(j["qubits"], field + ".qubits");
            for (size_t k = 0; k < qubits.size(); ++k) {
                support.push_back(static_cast<uint32_t>(as_unsigned(qubits[k], at(field + ".qubits", k))));
            }
        }
        spec = FaultSpec::depolarizing(p, std::move(support));
    }
    try {
        validate_fault(spec, n, field);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return spec;
}

Json fault_to_json(const FaultSpec &f) {
    Json j{{"p", number(f.p_fault)}};
    if (f.kind == FaultSpec::Kind::Explicit) {
        Json list = Json::array();
        for (const auto &[pauli, weight] : f.weighted) {
            list.push_back({pauli.str(), number(weight)});
        }
        j["paulis"] = list;
    } else if (!f.support.empty()) {
        j["qubits"] = f.support;
    }
    return j;
}

NoiseBehaviour BehaviourTemplate::bind(const LayeredCircuit &c) const {
    switch (kind) {
        case Kind::GlobalDepolarizing:
            return global_depolarizing_behaviour(label, c, p_err);
        case Kind::Uniform:
            return uniform_behaviour(label, c, uniform);
        case Kind::Explicit:
            break;
    }
    try {
        check_bound(c, explicit_behaviour);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return explicit_behaviour;
}

std::vector<BehaviourTemplate> behaviour_templates_from_json(const Json &j, size_t n, const std::string &field) {
    const Json &list = as_array(j, field);
    if (list.empty()) {
        fail(field, "behaviour set is empty");
    }
    std::vector<BehaviourTemplate> out;
    for (size_t i = 0; i < list.size(); ++i) {
        std::string f = at(field, i);
        const Json &entry = list[i];
        if (!entry.is_object()) {
            fail(f, "expected an object");
        }
        BehaviourTemplate t;
        t.label = static_cast<int>(i + 1);
        if (entry.contains("label")) {
            if (!entry["label"].is_number_integer()) {
                fail(f + ".label", "expected an integer");
            }
            t.label = entry["label"].get<int>();
        }
        for (const auto &other : out) {
            if (other.label == t.label) {
                fail(f + ".label", "duplicate label " + std::to_string(t.label));
            }
        }
        if (entry.contains("global_depolarizing")) {
            t.kind = BehaviourTemplate::Kind::GlobalDepolarizing;
            t.p_err = as_probability(entry["global_depolarizing"], f + ".global_depolarizing");
        } else if (entry.contains("every_location")) {
            t.kind = BehaviourTemplate::Kind::Uniform;
            t.uniform = fault_from_json(entry["every_location"], n, f + ".every_location");
        } else {
            t.kind = BehaviourTemplate::Kind::Explicit;
            NoiseBehaviour &b = t.explicit_behaviour;
            b.label = t.label;
            b.prep = fault_from_json(require(entry, "prep", f), n, f + ".prep");
            const Json &one = as_array(require(entry, "type_one", f), f + ".type_one");
            for (size_t k = 0; k < one.size(); ++k) {
                b.type_one.push_back(fault_from_json(one[k], n, at(f + ".type_one", k)));
            }
            const Json &two = as_array(require(entry, "type_two", f), f + ".type_two");
            for (size_t k = 0; k < two.size(); ++k) {
                b.type_two.push_back(fault_from_json(two[k], n, at(f + ".type_two", k)));
            }
            b.meas = fault_from_json(require(entry, "meas", f), n, f + ".meas");
        }
        out.push_back(std::move(t));
    }
    return out;
}

BehaviourSet bind_behaviours(const std::vector<BehaviourTemplate> &templates, const LayeredCircuit &c) {
    BehaviourSet set;
    for (size_t i = 0; i < templates.size(); ++i) {
        try {
            set.behaviours.push_back(templates[i].bind(c));
        } catch (const ConfigError &e) {
            fail(at("behaviours", i), e.what());
        }
    }
    return set;
}

TrapParameters trap_parameters_from_json(const Json &root) {
    double alpha = 0.95;
    if (root.contains("alpha")) {
        alpha = as_number(root["alpha"], "alpha");
        if (!(alpha > 0 && alpha < 1)) {
            fail("alpha", "must lie in (0,1)");
        }
    }
    std::optional<double> theta;
    if (root.contains("theta")) {
        theta = as_number(root["theta"], "theta");
        if (!(*theta > 0 && *theta <= 1)) {
            fail("theta", "must lie in (0,1]");
        }
    }
    TrapParameters out;
    if (root.contains("traps")) {
        out.traps = as_unsigned(root["traps"], "traps");
        if (out.traps == 0) {
            fail("traps", "must be at least 1");
        }
        out.theta = theta ? *theta : theta_for_traps(out.traps, alpha);
    } else if (theta) {
        out.theta = *theta;
        out.traps = min_traps(alpha, *theta);
    } else {
        fail("traps", "missing (give traps, or theta with optional alpha)");
    }
    return out;
}

AcceptanceMode acceptance_from_json(const Json &j, double theta, const std::string &field) {
    std::string mode = as_string(require(j, "mode", field), field + ".mode");
    if (mode == "tvd_bound") {
        double epsilon = as_number(require(j, "epsilon", field), field + ".epsilon");
        if (!(epsilon >= 0 && epsilon <= 1)) {
            fail(field + ".epsilon", "must lie in [0,1]");
        }
        bool conservative = true;
        if (j.contains("conservative")) {
            if (!j["conservative"].is_boolean()) {
                fail(field + ".conservative", "expected true or false");
            }
            conservative = j["conservative"].get<bool>();
        }
        return AcceptanceMode::tvd(epsilon, theta, conservative);
    }
    if (mode == "trap_cutoff") {
        return AcceptanceMode::trap_cutoff(as_unsigned(require(j, "cutoff", field), field + ".cutoff"), theta);
    }
    fail(field + ".mode", "expected \"tvd_bound\" or \"trap_cutoff\"");
}

Json acceptance_to_json(const AcceptanceMode &mode) {
    Json j{{"mode", mode.name()}, {"theta", number(mode.theta)}};
    if (mode.kind == AcceptanceMode::Kind::TrapCutoff) {
        j["cutoff"] = mode.cutoff;
    } else {
        j["epsilon"] = number(mode.epsilon);
        j["conservative"] = mode.conservative;
    }
    return j;
}

CampaignConfig campaign_from_json(const Json &root) {
    if (!root.is_object()) {
        fail("config", "expected an object");
    }
    std::string schema = as_string(require(root, "schema", "config"), "schema");
    if (schema != kSchemaVersion) {
        fail("schema", "unsupported version '" + schema + "', expected " + kSchemaVersion);
    }
    CampaignConfig cfg;
    cfg.target = circuit_from_json(require(root, "target", "config"), "target");
    const size_t n = cfg.target.num_qubits;
    if (root.contains("observable")) {
        std::string letters = as_string(root["observable"], "observable");
        cfg.observable = with_field("observable", [&] { return PauliObservable(letters); });
        if (cfg.observable.num_qubits() != n) {
            fail("observable", "acts on " + std::to_string(cfg.observable.num_qubits()) + " qubits, target has " +
                                   std::to_string(n));
        }
    } else {
        cfg.observable = PauliObservable(std::string(n, 'Z'));
    }
    cfg.runs = as_unsigned(require(root, "runs", "config"), "runs");
    if (cfg.runs == 0) {
        fail("runs", "must be at least 1");
    }
    TrapParameters traps = trap_parameters_from_json(root);
    cfg.traps = traps.traps;
    cfg.mode = acceptance_from_json(require(root, "acceptance", "config"), traps.theta);
    auto templates = behaviour_templates_from_json(require(root, "behaviours", "config"), n);
    cfg.behaviours = bind_behaviours(templates, absorb_measurement_basis(cfg.target, cfg.observable));
    if (root.contains("seed")) {
        cfg.seed = as_unsigned(root["seed"], "seed");
    }
    return cfg;
}

std::string runs_csv_header() {
    return "run_index,behaviour_label,nu,N_inc,tvd_bound,accepted,target_bits,lambda,target_frame";
}

void write_runs_csv(std::ostream &out, const std::vector<RunRecord> &records) {
    out << runs_csv_header() << '\n';
    for (const RunRecord &r : records) {
        out << r.run_index << ',' << r.behaviour_label << ',' << r.nu << ',' << r.n_inc << ','
            << format_double(r.tvd_bound) << ',' << (r.accepted ? 1 : 0) << ',' << bits_to_string(r.target_bits)
            << ',' << r.lambda << ',' << r.target_frame << '\n';
    }
}

Json report_to_json(const MitigationReport &report, const CampaignConfig &cfg, const std::string &runs_csv_path) {
    Json per = Json::array();
    for (const BehaviourTally &t : report.per_behaviour) {
        per.push_back({{"label", t.label},
                       {"p_err", number(t.p_err)},
                       {"truly_accepted", t.truly_accepted},
                       {"runs", t.runs},
                       {"accepted", t.accepted},
                       {"lambda_sum", t.lambda_sum},
                       {"accepted_lambda_sum", t.accepted_lambda_sum}});
    }
    return {{"schema", kSchemaVersion},
            {"status", report.o_mit_hat ? "ok" : "no accepted runs"},
            {"seed", cfg.seed},
            {"observable", cfg.observable.str()},
            {"qubits", cfg.target.num_qubits},
            {"layers", cfg.target.layers.size()},
            {"runs", report.runs},
            {"traps", report.traps},
            {"accepted", report.accepted},
            {"total_circuits", report.total_circuits},
            {"acceptance", acceptance_to_json(report.mode)},
            {"o_mit_hat", optional_number(report.o_mit_hat)},
            {"o_raw_hat", number(report.o_raw_hat)},
            {"accepted_lambda_sum", report.accepted_lambda_sum},
            {"lambda_sum", report.lambda_sum},
            {"sigma_w_hat", optional_number(report.sigma_w_hat)},
            {"misaccepted", report.misaccepted},
            {"misrejected", report.misrejected},
            {"per_behaviour", per},
            {"runs_csv", runs_csv_path}};
}

std::string summary_text(const MitigationReport &report) {
    std::ostringstream out;
    auto row = [&](const std::string &key, const std::string &value) {
        out << key << std::string(key.size() < 14 ? 14 - key.size() : 1, ' ') << value << '\n';
    };
    std::string mode = report.mode.name();
    if (report.mode.kind == AcceptanceMode::Kind::TrapCutoff) {
        mode += " (passed traps > " + std::to_string(report.mode.cutoff) + ")";
    } else {
        mode += " (epsilon " + format_double(report.mode.epsilon) + ", theta " + format_double(report.mode.theta) +
                (report.mode.conservative ? ", conservative)" : ", point estimate)");
    }
    row("acceptance", mode);
    row("K", std::to_string(report.runs));
    row("M", std::to_string(report.traps));
    row("m", std::to_string(report.accepted));
    row("C_tot", std::to_string(report.total_circuits));
    row("o_mit_hat", report.o_mit_hat ? format_double(*report.o_mit_hat) : "undefined (no accepted runs)");
    row("o_raw_hat", format_double(report.o_raw_hat));
    out << '\n' << "label  p_err            runs      accepted\n";
    for (const BehaviourTally &t : report.per_behaviour) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-6d %-16s %-9zu %zu\n", t.label, format_double(t.p_err).c_str(), t.runs,
                      t.accepted);
        out << line;
    }
    return out.str();
}

}  // namespace accredo
