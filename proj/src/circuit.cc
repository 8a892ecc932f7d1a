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

#include "accredo/circuit.h"

#include <bit>
#include <numbers>
#include <stdexcept>

namespace accredo {

Mat2 Gate::matrix() const {
    return std::visit(
        [](const auto &op) -> Mat2 {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, SingleQubitClifford>) {
                return op.unitary();
            } else if constexpr (std::is_same_v<T, Rotation>) {
                return rotation_matrix(op.axis, op.angle);
            } else {
                return op;
            }
        },
        op_);
}

size_t LayeredCircuit::band_count() const {
    size_t m = 0;
    for (const auto &layer : layers) {
        m += layer.kind == LayerKind::TypeII;
    }
    return m;
}

size_t LayeredCircuit::type_one_count() const { return layers.size() - band_count(); }

std::vector<std::string> validate_circuit(const LayeredCircuit &c) {
    std::vector<std::string> violations;
    const size_t n = c.num_qubits;
    if (n == 0) {
        violations.emplace_back("circuit has no qubits");
    }
    if (c.layers.empty()) {
        violations.emplace_back("circuit has no layers");
        return violations;
    }
    if (c.layers.front().kind != LayerKind::TypeII) {
        violations.emplace_back("first layer must be TypeII");
    }
    if (c.layers.back().kind != LayerKind::TypeII) {
        violations.emplace_back("last layer must be TypeII");
    }
    for (size_t k = 0; k < c.layers.size(); ++k) {
        const Layer &layer = c.layers[k];
        std::string where = "layer " + std::to_string(k) + ": ";
        if (k > 0 && layer.kind == c.layers[k - 1].kind) {
            violations.push_back(where + "alternation broken");
        }
        if (layer.kind == LayerKind::TypeII) {
            if (layer.gates.size() != n) {
                violations.push_back(where + "TypeII layer has " + std::to_string(layer.gates.size()) +
                                     " gates for " + std::to_string(n) + " qubits");
            }
            if (!layer.edges.empty()) {
                violations.push_back(where + "TypeII layer carries CZ edges");
            }
        } else {
            if (!layer.gates.empty()) {
                violations.push_back(where + "TypeI layer carries single-qubit gates");
            }
            try {
                check_edges(layer.edges, n);
            } catch (const std::invalid_argument &e) {
                violations.push_back(where + e.what());
            }
        }
    }
    return violations;
}

void require_valid(const LayeredCircuit &c) {
    auto violations = validate_circuit(c);
    if (violations.empty()) {
        return;
    }
    std::string message = "invalid layered circuit:";
    for (const auto &v : violations) {
        message += "\n  " + v;
    }
    throw std::invalid_argument(message);
}

LayeredCircuit ansatz_fig1(size_t n, size_t total_layers) {
    if (n < 2) {
        throw std::invalid_argument("ansatz needs at least 2 qubits");
    }
    if (total_layers % 2 == 0) {
        throw std::invalid_argument("ansatz layer count must be odd, got " + std::to_string(total_layers));
    }
    LayeredCircuit c;
    c.num_qubits = n;
    const Gate rx_pi(Rotation{'X', std::numbers::pi});
    for (size_t k = 0; k < total_layers; ++k) {
        if (k % 2 == 0) {
            c.layers.push_back(Layer::single(std::vector<Gate>(n, rx_pi)));
            continue;
        }
        size_t type_one_index = k / 2 + 1;
        std::vector<Edge> edges;
        for (size_t q = (type_one_index % 2 == 1) ? 0 : 1; q + 1 < n; q += 2) {
            edges.emplace_back(static_cast<uint32_t>(q), static_cast<uint32_t>(q + 1));
        }
        c.layers.push_back(Layer::cz(std::move(edges)));
    }
    return c;
}

PauliObservable::PauliObservable(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) {
        throw std::invalid_argument("observable has no qubits");
    }
    bool any = false;
    for (char &ch : letters_) {
        if (ch == '1' || ch == '_') {
            ch = 'I';
        }
        if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
            throw std::invalid_argument("observable letter '" + std::string(1, ch) + "' not in {I,X,Y,Z}");
        }
        any |= ch != 'I';
    }
    if (!any) {
        throw std::invalid_argument("observable must not be the identity");
    }
}

Bitstring bits_from_index(uint64_t index, size_t n) {
    Bitstring bits(n);
    for (size_t q = 0; q < n; ++q) {
        bits[q] = (index >> q) & 1;
    }
    return bits;
}

uint64_t index_from_bits(const Bitstring &bits) {
    uint64_t index = 0;
    for (size_t q = 0; q < bits.size(); ++q) {
        index |= uint64_t{bits[q] & 1u} << q;
    }
    return index;
}

std::string bits_to_string(const Bitstring &bits) {
    std::string out(bits.size(), '0');
    for (size_t q = 0; q < bits.size(); ++q) {
        out[q] = bits[q] ? '1' : '0';
    }
    return out;
}

Bitstring bits_from_string(std::string_view text) {
    Bitstring bits(text.size());
    for (size_t q = 0; q < text.size(); ++q) {
        if (text[q] != '0' && text[q] != '1') {
            throw std::invalid_argument("bitstring character must be 0 or 1");
        }
        bits[q] = text[q] == '1';
    }
    return bits;
}

std::vector<SingleQubitClifford> measurement_basis_layer(const PauliObservable &o) {
    const SingleQubitClifford h = SingleQubitClifford::hadamard();
    const SingleQubitClifford s_dag = SingleQubitClifford::phase_s().inverse();
    std::vector<SingleQubitClifford> layer;
    layer.reserve(o.num_qubits());
    for (size_t q = 0; q < o.num_qubits(); ++q) {
        switch (o.letter(q)) {
            case 'X':
                layer.push_back(h);
                break;
            case 'Y':
                layer.push_back(compose(h, s_dag));
                break;
            default:
                layer.push_back(SingleQubitClifford::identity());
        }
    }
    return layer;
}

LayeredCircuit absorb_measurement_basis(const LayeredCircuit &c, const PauliObservable &o) {
    require_valid(c);
    if (o.num_qubits() != c.num_qubits) {
        throw std::invalid_argument("observable and circuit qubit counts differ");
    }
    LayeredCircuit out = c;
    auto rotations = measurement_basis_layer(o);
    auto &gates = out.layers.back().gates;
    for (size_t q = 0; q < gates.size(); ++q) {
        if (rotations[q] == SingleQubitClifford::identity()) {
            continue;
        }
        if (gates[q].is_clifford()) {
            gates[q] = compose(rotations[q], gates[q].clifford());
        } else {
            gates[q] = Gate(mat2_mul(rotations[q].unitary(), gates[q].matrix()));
        }
    }
    return out;
}

int eigenvalue_from_bitstring(const PauliObservable &o, const Bitstring &s) {
    if (s.size() != o.num_qubits()) {
        throw std::invalid_argument("bitstring length " + std::to_string(s.size()) + " does not match observable on " +
                                    std::to_string(o.num_qubits()) + " qubits");
    }
    int parity = 0;
    for (size_t q = 0; q < s.size(); ++q) {
        if (o.letter(q) != 'I') {
            parity ^= s[q] & 1;
        }
    }
    return parity ? -1 : 1;
}

int eigenvalue_from_index(const PauliObservable &o, uint64_t index) {
    uint64_t support = 0;
    for (size_t q = 0; q < o.num_qubits(); ++q) {
        if (o.letter(q) != 'I') {
            support |= uint64_t{1} << q;
        }
    }
    return (std::popcount(index & support) & 1) ? -1 : 1;
}

}  // namespace accredo
