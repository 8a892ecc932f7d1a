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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "accredo/accreditation.h"
#include "accredo/circuit.h"
#include "accredo/noise.h"
#include "accredo/rng.h"

namespace accredo {

/// Inputs of a K-run post-selection campaign. Behaviours must already be bound
/// to the target's layer structure.
struct CampaignConfig {
    LayeredCircuit target;
    PauliObservable observable{"Z"};
    size_t runs = 1;   // K
    size_t traps = 1;  // M
    AcceptanceMode mode;
    BehaviourSet behaviours;
    uint64_t seed = 0;
};

/// Throws std::invalid_argument describing the first problem found.
void validate_campaign(const CampaignConfig &cfg);

struct BehaviourTally {
    int label = 0;
    double p_err = 0;
    /// Accepted under the true partition p_err <= epsilon.
    bool truly_accepted = false;
    size_t runs = 0;
    size_t accepted = 0;
    long long lambda_sum = 0;
    long long accepted_lambda_sum = 0;
};

/// Campaign aggregate. o_mit_hat is empty when no run was accepted.
struct MitigationReport {
    size_t runs = 0;      // K
    size_t traps = 0;     // M
    size_t accepted = 0;  // m
    AcceptanceMode mode;
    std::optional<double> o_mit_hat;
    double o_raw_hat = 0;
    long long accepted_lambda_sum = 0;
    long long lambda_sum = 0;
    /// Variance of the per-behaviour accepted-run means around o_mit_hat.
    std::optional<double> sigma_w_hat;
    std::vector<BehaviourTally> per_behaviour;
    /// Accepted runs whose behaviour is rejected by the true partition.
    size_t misaccepted = 0;
    /// Rejected runs whose behaviour is accepted by the true partition.
    size_t misrejected = 0;
    uint64_t total_circuits = 0;
    std::vector<RunRecord> records;
};

/// Uniform label draw (one draw per call).
int sample_behaviour(const BehaviourSet &set, Rng &rng);

/// Runs K accreditation runs; run j uses the stream derive_seed(seed, j), so
/// the report is identical for every worker count (0 = machine parallelism).
MitigationReport run_campaign(const CampaignConfig &cfg, size_t workers = 0);

/// Labels with p_err,l <= epsilon.
std::vector<int> true_partition(const BehaviourSet &set, double epsilon);

/// Uniform average of exact <O>_l over the accepted labels.
double o_mit_exact(const BehaviourSet &set, std::span<const int> accepted, const LayeredCircuit &c,
                   const PauliObservable &o);

/// Uniform average of exact <O>_l over every behaviour.
double o_noisy_exact(const BehaviourSet &set, const LayeredCircuit &c, const PauliObservable &o);

/// Mean over accepted runs of the exact expectation of each run's behaviour.
/// expectation_of_label(label) supplies <O>_label. Empty if nothing accepted.
template <typename Lookup>
std::optional<double> s_omega(std::span<const RunRecord> records, Lookup &&expectation_of_label) {
    double total = 0;
    size_t m = 0;
    for (const auto &r : records) {
        if (r.accepted) {
            total += expectation_of_label(r.behaviour_label);
            ++m;
        }
    }
    if (m == 0) {
        return std::nullopt;
    }
    return total / static_cast<double>(m);
}

/// (1/w) sum (<O>_l - o_mit)^2 over the accepted behaviours' expectations.
double sigma_w(std::span<const double> expectations, double o_mit);

/// ceil(N variance_w / (w (1-gamma) epsilon1^2)), floored at k_min.
size_t required_runs(size_t total_behaviours, size_t accepted_behaviours, double variance_w, double gamma,
                     double epsilon1, size_t k_min = 100);

/// Branch of the concentration bound on the estimator.
struct Theorem2Branch {
    /// false: s_omega >= 0 with beta in [1/2, 1). true: s_omega < 0 with beta
    /// in (1, 1/(2 lambda)].
    bool negative = false;
    /// Lower-bound constant of the constraint 2 lambda - 1 <= s_omega.
    double lambda = 0;
};

struct Theorem2Delta {
    double delta = 0;
    /// False when ell exceeds the cap of the negative branch.
    bool valid = true;
};

/// delta = sqrt(beta/2)/|1-beta| * sqrt(ell epsilon1^2 (1-gamma) / variance_w).
Theorem2Delta theorem2_delta(double ell, double beta, double gamma, double epsilon1, double variance_w,
                             Theorem2Branch branch = {});

/// K (M + 1).
uint64_t total_circuits(size_t runs, size_t traps);

struct DepolarizingCheck {
    double mitigated_error = 0;  // |<O>_mit - <O>_id|
    double noisy_error = 0;      // |<O>_noisy - <O>_id|
    double o_mit = 0;
    double o_noisy = 0;
    bool holds = false;    // mitigated_error < noisy_error
    bool vacuous = false;  // every behaviour accepted, the two coincide
};

/// Closed-form comparison for globally depolarizing behaviours using
/// <O>_l = (1 - p_err,l) <O>_id and the partition p_err,l <= epsilon.
DepolarizingCheck depolarizing_check(const BehaviourSet &set, double epsilon, double o_id);

}  // namespace accredo
