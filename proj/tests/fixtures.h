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

#include <cmath>
#include <numbers>
#include <vector>

#include "accredo/circuit.h"
#include "accredo/rng.h"

namespace accredo::oracle {

/// Haar-ish random single-qubit unitary built from three rotations.
inline Mat2 random_unitary(Rng &rng) {
    auto angle = [&] { return 2 * std::numbers::pi * rng.uniform01(); };
    return mat2_mul(rotation_matrix('Z', angle()), mat2_mul(rotation_matrix('Y', angle()), rotation_matrix('Z', angle())));
}

/// Random disjoint edge set; each qubit is paired with probability about 1/2.
inline std::vector<Edge> random_edges(size_t n, Rng &rng) {
    std::vector<uint32_t> order(n);
    for (size_t q = 0; q < n; ++q) {
        order[q] = static_cast<uint32_t>(q);
    }
    for (size_t q = n; q > 1; --q) {
        std::swap(order[q - 1], order[rng.uniform_below(q)]);
    }
    std::vector<Edge> edges;
    for (size_t k = 0; k + 1 < n; k += 2) {
        if (rng.uniform_below(4) != 0) {
            edges.emplace_back(order[k], order[k + 1]);
        }
    }
    return edges;
}

/// Random valid layered circuit with `total_layers` (odd) layers. Single-qubit
/// gates cover every Gate alternative.
inline LayeredCircuit random_circuit(size_t n, size_t total_layers, Rng &rng) {
    LayeredCircuit c;
    c.num_qubits = n;
    for (size_t k = 0; k < total_layers; ++k) {
        if (k % 2 == 1) {
            c.layers.push_back(Layer::cz(random_edges(n, rng)));
            continue;
        }
        std::vector<Gate> gates;
        for (size_t q = 0; q < n; ++q) {
            switch (rng.uniform_below(3)) {
                case 0:
                    gates.emplace_back(SingleQubitClifford(static_cast<int>(rng.uniform_below(24))));
                    break;
                case 1:
                    gates.emplace_back(Rotation{"XYZ"[rng.uniform_below(3)], 2 * std::numbers::pi * rng.uniform01()});
                    break;
                default:
                    gates.emplace_back(random_unitary(rng));
                    break;
            }
        }
        c.layers.push_back(Layer::single(std::move(gates)));
    }
    return c;
}

}  // namespace accredo::oracle
