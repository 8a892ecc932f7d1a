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
#include <string_view>
#include <variant>
#include <vector>

#include "accredo/clifford.h"
#include "accredo/mat2.h"
#include "accredo/pauli_string.h"

namespace accredo {

/// Rotation exp(-i angle/2 P) about a named axis.
struct Rotation {
    char axis = 'X';
    double angle = 0;
    bool operator==(const Rotation &) const = default;
};

/// Single-qubit gate of a TypeII layer: a Clifford table entry (traps), a named
/// rotation, or an arbitrary 2x2 unitary (targets).
class Gate {
   public:
    using Op = std::variant<SingleQubitClifford, Rotation, Mat2>;

    Gate() : op_(SingleQubitClifford::identity()) {}
    Gate(SingleQubitClifford c) : op_(c) {}
    Gate(Rotation r) : op_(r) {}
    Gate(const Mat2 &m) : op_(m) {}

    const Op &op() const { return op_; }
    bool is_clifford() const { return std::holds_alternative<SingleQubitClifford>(op_); }
    SingleQubitClifford clifford() const { return std::get<SingleQubitClifford>(op_); }
    Mat2 matrix() const;

    bool operator==(const Gate &) const = default;

   private:
    Op op_;
};

enum class LayerKind : uint8_t { TypeI, TypeII };

/// TypeI: product of CZ gates over a disjoint edge set. TypeII: one
/// single-qubit gate per qubit.
struct Layer {
    LayerKind kind = LayerKind::TypeII;
    std::vector<Edge> edges;
    std::vector<Gate> gates;

    static Layer cz(std::vector<Edge> edges) { return Layer{LayerKind::TypeI, std::move(edges), {}}; }
    static Layer single(std::vector<Gate> gates) { return Layer{LayerKind::TypeII, {}, std::move(gates)}; }

    bool operator==(const Layer &) const = default;
};

/// Circuit of 2m-1 layers alternating TypeII, TypeI, ..., TypeII on n qubits,
/// applied to |0...0> and measured in the Z basis.
///
/// The struct can hold malformed data; validate_circuit reports what is wrong
/// and require_valid throws.
struct LayeredCircuit {
    size_t num_qubits = 0;
    std::vector<Layer> layers;

    /// Number of TypeII layers (m).
    size_t band_count() const;
    size_t type_one_count() const;

    bool operator==(const LayeredCircuit &) const = default;
};

/// All structural violations; empty iff the circuit is valid.
std::vector<std::string> validate_circuit(const LayeredCircuit &c);

/// Throws std::invalid_argument listing every violation.
void require_valid(const LayeredCircuit &c);

/// Alternating RX(pi) layers and brickwork CZ layers. TypeI layers with odd
/// 1-based index couple (0,1),(2,3),...; even ones couple (1,2),(3,4),...
LayeredCircuit ansatz_fig1(size_t n, size_t total_layers);

/// Non-identity Pauli observable, one letter in {I,X,Y,Z} per qubit.
class PauliObservable {
   public:
    /// Parses e.g. "ZZIZ". Throws on bad letters or an all-identity string.
    explicit PauliObservable(std::string_view letters);

    size_t num_qubits() const { return letters_.size(); }
    char letter(size_t q) const { return letters_[q]; }
    const std::string &str() const { return letters_; }

    bool operator==(const PauliObservable &) const = default;

   private:
    std::string letters_;
};

/// Outcome bits, position q holds qubit q.
using Bitstring = std::vector<uint8_t>;

Bitstring bits_from_index(uint64_t index, size_t n);
uint64_t index_from_bits(const Bitstring &bits);
/// '0'/'1' characters, qubit 0 leftmost.
std::string bits_to_string(const Bitstring &bits);
Bitstring bits_from_string(std::string_view text);

/// Per-qubit Clifford mapping a measurement of o onto Z readout: identity for
/// I and Z, Hadamard for X, H*Sdag for Y.
std::vector<SingleQubitClifford> measurement_basis_layer(const PauliObservable &o);

/// Folds measurement_basis_layer(o) into the final TypeII layer.
LayeredCircuit absorb_measurement_basis(const LayeredCircuit &c, const PauliObservable &o);

/// Product over non-identity positions q of (-1)^{s_q}.
int eigenvalue_from_bitstring(const PauliObservable &o, const Bitstring &s);

/// Same as eigenvalue_from_bitstring for an outcome given as a basis index.
int eigenvalue_from_index(const PauliObservable &o, uint64_t index);

}  // namespace accredo
