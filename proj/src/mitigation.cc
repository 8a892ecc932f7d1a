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

#include "accredo/mitigation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "accredo/parallel.h"

namespace accredo {

void validate_campaign(const CampaignConfig &cfg) {
    require_valid(cfg.target);
    if (cfg.observable.num_qubits() != cfg.target.num_qubits) {
        throw std::invalid_argument("observable acts on " + std::to_string(cfg.observable.num_qubits()) +
                                    " qubits, target has " + std::to_string(cfg.target.num_qubits));
    }
    if (cfg.runs == 0) {
        throw std::invalid_argument("runs must be at least 1");
    }
    if (cfg.traps == 0) {
        throw std::invalid_argument("traps must be at least 1");
    }
    if (cfg.mode.kind == AcceptanceMode::Kind::TvdBound && !(cfg.mode.epsilon >= 0 && cfg.mode.epsilon <= 1)) {
        throw std::invalid_argument("epsilon must lie in [0,1]");
    }
    if (!(cfg.mode.theta > 0 && cfg.mode.theta <= 1)) {
        throw std::invalid_argument("theta must lie in (0,1]");
    }
    validate_behaviour_set(cfg.behaviours, cfg.target.num_qubits);
    for (const auto &b : cfg.behaviours.behaviours) {
        check_bound(cfg.target, b);
    }
}

int sample_behaviour(const BehaviourSet &set, Rng &rng) {
    if (set.behaviours.empty()) {
        throw std::invalid_argument("cannot sample from an empty behaviour set");
    }
    return set.behaviours[rng.uniform_below(set.behaviours.size())].label;
}

std::vector<int> true_partition(const BehaviourSet &set, double epsilon) {
    std::vector<int> labels;
    for (const auto &b : set.behaviours) {
        if (p_err_of(b) <= epsilon) {
            labels.push_back(b.label);
        }
    }
    return labels;
}

MitigationReport run_campaign(const CampaignConfig &cfg, size_t workers) {
    validate_campaign(cfg);
    const PreparedTarget target(cfg.target, cfg.observable);
    MitigationReport report;
    report.runs = cfg.runs;
    report.traps = cfg.traps;
    report.mode = cfg.mode;
    report.total_circuits = total_circuits(cfg.runs, cfg.traps);
    report.records.resize(cfg.runs);

    parallel_for(cfg.runs, workers, [&](size_t j) {
        Rng rng(derive_seed(cfg.seed, j));
        const NoiseBehaviour &b = cfg.behaviours.by_label(sample_behaviour(cfg.behaviours, rng));
        RunRecord record = run_accreditation(target, cfg.traps, b, cfg.mode, rng);
        record.run_index = j;
        report.records[j] = std::move(record);
    });

    const bool has_epsilon = cfg.mode.kind == AcceptanceMode::Kind::TvdBound;
    for (const auto &b : cfg.behaviours.behaviours) {
        BehaviourTally tally;
        tally.label = b.label;
        tally.p_err = p_err_of(b);
        tally.truly_accepted = has_epsilon && tally.p_err <= cfg.mode.epsilon;
        report.per_behaviour.push_back(tally);
    }
    auto tally_for = [&](int label) -> BehaviourTally & {
        for (auto &t : report.per_behaviour) {
            if (t.label == label) {
                return t;
            }
        }
        throw std::logic_error("record with unknown behaviour label");
    };
    for (const auto &r : report.records) {
        BehaviourTally &t = tally_for(r.behaviour_label);
        ++t.runs;
        t.lambda_sum += r.lambda;
        report.lambda_sum += r.lambda;
        if (r.accepted) {
            ++t.accepted;
            t.accepted_lambda_sum += r.lambda;
            report.accepted_lambda_sum += r.lambda;
            ++report.accepted;
        }
        if (has_epsilon) {
            report.misaccepted += r.accepted && !t.truly_accepted;
            report.misrejected += !r.accepted && t.truly_accepted;
        }
    }
    report.o_raw_hat = static_cast<double>(report.lambda_sum) / static_cast<double>(report.runs);
    if (report.accepted > 0) {
        double o_mit = static_cast<double>(report.accepted_lambda_sum) / static_cast<double>(report.accepted);
        report.o_mit_hat = o_mit;
        std::vector<double> means;
        for (const auto &t : report.per_behaviour) {
            if (t.accepted > 0) {
                means.push_back(static_cast<double>(t.accepted_lambda_sum) / static_cast<double>(t.accepted));
            }
        }
        report.sigma_w_hat = sigma_w(means, o_mit);
    }
    return report;
}

double o_mit_exact(const BehaviourSet &set, std::span<const int> accepted, const LayeredCircuit &c,
                   const PauliObservable &o) {
    if (accepted.empty()) {
        throw std::invalid_argument("accepted behaviour subset is empty");
    }
    double total = 0;
    for (int label : accepted) {
        total += exact_noisy_expectation(c, set.by_label(label), o);
    }
    return total / static_cast<double>(accepted.size());
}

double o_noisy_exact(const BehaviourSet &set, const LayeredCircuit &c, const PauliObservable &o) {
    std::vector<int> all;
    for (const auto &b : set.behaviours) {
        all.push_back(b.label);
    }
    return o_mit_exact(set, all, c, o);
}

double sigma_w(std::span<const double> expectations, double o_mit) {
    if (expectations.empty()) {
        throw std::invalid_argument("sigma_w needs at least one accepted behaviour");
    }
    double total = 0;
    for (double e : expectations) {
        total += (e - o_mit) * (e - o_mit);
    }
    return total / static_cast<double>(expectations.size());
}

size_t required_runs(size_t total_behaviours, size_t accepted_behaviours, double variance_w, double gamma,
                     double epsilon1, size_t k_min) {
    if (accepted_behaviours == 0 || accepted_behaviours > total_behaviours) {
        throw std::invalid_argument("need 1 <= w <= N");
    }
    if (!(gamma > 0 && gamma < 1)) {
        throw std::invalid_argument("gamma must lie in (0,1)");
    }
    if (!(epsilon1 > 0)) {
        throw std::invalid_argument("epsilon1 must be positive");
    }
    if (!(variance_w >= 0)) {
        throw std::invalid_argument("variance must be nonnegative");
    }
    double k = static_cast<double>(total_behaviours) * variance_w /
               (static_cast<double>(accepted_behaviours) * (1 - gamma) * epsilon1 * epsilon1);
    // Guard against 80.0000000001 from rounding in the quotient.
    double rounded = std::round(k);
    size_t needed = std::abs(k - rounded) < 1e-9 * std::max(1.0, k) ? static_cast<size_t>(rounded)
                                                                      : static_cast<size_t>(std::ceil(k));
    return std::max(needed, k_min);
}

Theorem2Delta theorem2_delta(double ell, double beta, double gamma, double epsilon1, double variance_w,
                             Theorem2Branch branch) {
    if (!(ell > 0)) {
        throw std::invalid_argument("ell must be positive");
    }
    if (!(gamma > 0 && gamma < 1) || !(epsilon1 > 0) || !(variance_w > 0)) {
        throw std::invalid_argument("need gamma in (0,1), epsilon1 > 0, variance > 0");
    }
    double cap = 0;
    if (branch.negative) {
        if (!(branch.lambda > 0 && branch.lambda < 0.5)) {
            throw std::invalid_argument("lambda must lie in (0, 1/2)");
        }
        if (!(beta > 1 && beta <= 1 / (2 * branch.lambda))) {
            throw std::invalid_argument("negative branch needs beta in (1, 1/(2 lambda)]");
        }
        double ratio = 2 * branch.lambda / (1 - 2 * branch.lambda);
        cap = ratio * ratio * variance_w / ((1 - gamma) * epsilon1 * epsilon1);
    } else if (!(beta >= 0.5 && beta < 1)) {
        throw std::invalid_argument("nonnegative branch needs beta in [1/2, 1)");
    }
    Theorem2Delta out;
    out.delta = std::sqrt(beta / 2) / std::abs(1 - beta) *
                std::sqrt(ell * epsilon1 * epsilon1 * (1 - gamma) / variance_w);
    out.valid = !branch.negative || ell <= cap;
    return out;
}

uint64_t total_circuits(size_t runs, size_t traps) {
    if (runs == 0 || traps == 0) {
        throw std::invalid_argument("total_circuits needs K >= 1 and M >= 1");
    }
    return static_cast<uint64_t>(runs) * (static_cast<uint64_t>(traps) + 1);
}

DepolarizingCheck depolarizing_check(const BehaviourSet &set, double epsilon, double o_id) {
    if (set.behaviours.empty()) {
        throw std::invalid_argument("behaviour set is empty");
    }
    auto global = [](const FaultSpec &f) { return f.p_fault == 0 || f.is_global_depolarizing(); };
    double noisy_sum = 0;
    double accepted_sum = 0;
    size_t accepted = 0;
    for (const auto &b : set.behaviours) {
        bool ok = global(b.prep) && global(b.meas) && std::all_of(b.type_one.begin(), b.type_one.end(), global) &&
                  std::all_of(b.type_two.begin(), b.type_two.end(), global);
        if (!ok) {
            throw std::invalid_argument("behaviour " + std::to_string(b.label) + " is not globally depolarizing");
        }
        double p = p_err_of(b);
        noisy_sum += (1 - p) * o_id;
        if (p <= epsilon) {
            accepted_sum += (1 - p) * o_id;
            ++accepted;
        }
    }
    if (accepted == 0) {
        throw std::invalid_argument("no behaviour is accepted at this epsilon");
    }
    DepolarizingCheck check;
    check.o_noisy = noisy_sum / static_cast<double>(set.size());
    check.o_mit = accepted_sum / static_cast<double>(accepted);
    check.noisy_error = std::abs(check.o_noisy - o_id);
    check.mitigated_error = std::abs(check.o_mit - o_id);
    check.vacuous = accepted == set.size();
    check.holds = check.mitigated_error < check.noisy_error;
    return check;
}

}  // namespace accredo
