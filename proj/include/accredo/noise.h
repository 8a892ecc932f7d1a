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
#include <string>
#include <utility>
#include <vector>

#include "accredo/circuit.h"
#include "accredo/pauli_string.h"
#include "accredo/rng.h"
#include "accredo/statevector.h"

namespace accredo {

/// Stochastic Pauli fault at one circuit location.
///
/// With probability p_fault a fault event fires. A depolarizing event applies
/// a Pauli drawn uniformly from all 4^k Paulis on the support (empty support =
/// every qubit), i.e. it replaces the support by the maximally mixed state. An
/// explicit event draws one of the listed non-identity Paulis by weight.
struct FaultSpec {
    enum class Kind : uint8_t { Depolarizing, Explicit };

    double p_fault = 0;
    Kind kind = Kind::Depolarizing;
    std::vector<uint32_t> support;
    std::vector<std::pair<PauliString, double>> weighted;

    static FaultSpec none() { return {}; }
    static FaultSpec depolarizing(double p, std::vector<uint32_t> support = {});
    static FaultSpec explicit_paulis(double p, std::vector<std::pair<PauliString, double>> weighted);

    bool is_global_depolarizing() const { return kind == Kind::Depolarizing && support.empty(); }

    /// Draws the Pauli applied when the event fires.
    PauliString sample_pauli(size_t n, Rng &rng) const;

    bool operator==(const FaultSpec &) const = default;
};

/// Throws std::invalid_argument naming `field` if spec is malformed for n qubits.
void validate_fault(const FaultSpec &spec, size_t n, const std::string &field);

/// One stochastic-Pauli noise configuration for a layered circuit. Every layer
/// has a fault slot, as do preparation and readout.
///
/// TypeII faults are keyed by layer position only, so traps and target sharing
/// a layer structure also share its noise.
struct NoiseBehaviour {
    int label = 1;
    FaultSpec prep;
    std::vector<FaultSpec> type_one;  // one per TypeI layer
    std::vector<FaultSpec> type_two;  // one per TypeII layer
    FaultSpec meas;

    size_t location_count() const { return type_one.size() + type_two.size() + 2; }
    bool operator==(const NoiseBehaviour &) const = default;
};

/// Finite set of N behaviours with unique labels.
struct BehaviourSet {
    std::vector<NoiseBehaviour> behaviours;

    size_t size() const { return behaviours.size(); }
    const NoiseBehaviour &by_label(int label) const;
};

/// Throws unless the behaviour's layer fault lists match c and every FaultSpec
/// is well formed.
void check_bound(const LayeredCircuit &c, const NoiseBehaviour &b);
void validate_behaviour_set(const BehaviourSet &set, size_t n);

/// Behaviour with the same FaultSpec at every location of c.
NoiseBehaviour uniform_behaviour(int label, const LayeredCircuit &c, const FaultSpec &spec);

/// Global depolarizing behaviour whose fault probability is spread evenly over
/// all locations so that p_err_of(c, b) == p_err.
NoiseBehaviour global_depolarizing_behaviour(int label, const LayeredCircuit &c, double p_err);

/// Probability that at least one fault event fires anywhere.
double p_err_of(const LayeredCircuit &c, const NoiseBehaviour &b);

/// p_err computed from the behaviour alone (no binding check).
double p_err_of(const NoiseBehaviour &b);

/// Per-worker shot sampler owning its statevector buffers.
///
/// Randomness is consumed in a fixed order per shot: for every location in
/// circuit order (preparation, each layer) one Bernoulli draw plus the Pauli
/// draws of a fired event. The readout outcome draw comes next and the
/// measurement fault last.
class ShotSampler {
   public:
    explicit ShotSampler(size_t n);

    /// Returns the outcome as a basis index (bit q = qubit q).
    uint64_t sample(const LayeredCircuit &c, const NoiseBehaviour &b, Rng &rng);

   private:
    StateVector state_;
    std::vector<double> probs_;
};

/// One measurement outcome of c under behaviour b.
Bitstring sample_shot(const LayeredCircuit &c, const NoiseBehaviour &b, Rng &rng);

/// Histogram of `shots` outcomes. Shot k uses the stream derive_seed(seed,
/// stream, k), so results do not depend on how shots are partitioned.
std::vector<uint64_t> sample_histogram(const LayeredCircuit &c, const NoiseBehaviour &b, uint64_t seed,
                                       uint64_t stream, size_t shots);

/// Qubit and fault-location limits of the exact oracle.
inline constexpr size_t kOracleMaxQubits = 6;
inline constexpr size_t kOracleMaxLocations = 20;

/// Exact outcome distribution of c under b, evolved as a density matrix with
/// each location's Pauli channel. n <= 6 and at most 20 fault locations.
std::vector<double> exact_noisy_distribution(const LayeredCircuit &c, const NoiseBehaviour &b);

/// Exact <O> for target c under behaviour b; the basis change for o is folded
/// into the final layer first.
double exact_noisy_expectation(const LayeredCircuit &c, const NoiseBehaviour &b, const PauliObservable &o);

/// Exact noiseless <O> for target c.
double ideal_expectation(const LayeredCircuit &c, const PauliObservable &o);

}  // namespace accredo
