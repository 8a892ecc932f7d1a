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
#include <span>
#include <vector>

#include "accredo/circuit.h"
#include "accredo/kernels.h"
#include "accredo/pauli_string.h"
#include "accredo/rng.h"

namespace accredo {

/// Largest qubit count accepted by the dense engine.
inline constexpr size_t kMaxDenseQubits = 24;

/// Dense statevector over n qubits, starting in |0...0>.
class StateVector {
   public:
    explicit StateVector(size_t n, const kernels::KernelTable &k = kernels::active());

    size_t num_qubits() const { return n_; }
    std::span<const Complex> amplitudes() const { return amps_; }

    void reset();
    /// Overwrites the amplitudes; size must be 2^n.
    void assign(std::span<const Complex> amps);
    void apply_gate(size_t q, const Mat2 &m);
    void apply_cz(size_t a, size_t b);
    void apply_layer(const Layer &layer);
    /// Applies a Pauli operator, phase included.
    void apply_pauli(const PauliString &p);

    /// |amplitude|^2 per basis index.
    void probabilities(std::vector<double> &out) const;
    std::vector<double> probabilities() const;

    /// Draws one basis index from the current state using one uniform draw.
    uint64_t sample(Rng &rng, std::vector<double> &scratch) const;

   private:
    size_t n_;
    const kernels::KernelTable *kernels_;
    std::vector<Complex> amps_;
    std::vector<Complex> scratch_;
};

/// Noiseless amplitudes of c applied to |0...0>. Throws if the circuit is
/// invalid or n exceeds kMaxDenseQubits.
std::vector<Complex> simulate_ideal(const LayeredCircuit &c);

/// Squared magnitudes of simulate_ideal(c).
std::vector<double> ideal_distribution(const LayeredCircuit &c);

/// Draws an index from a probability vector with one uniform draw.
uint64_t sample_index(std::span<const double> probs, Rng &rng);

/// Sum over outcomes of p(s) times the eigenvalue of o on s.
double expectation_from_distribution(std::span<const double> probs, const PauliObservable &o);

}  // namespace accredo
