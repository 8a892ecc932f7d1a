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

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "accredo/circuit.h"
#include "accredo/pauli_string.h"
#include "accredo/rng.h"

namespace accredo {

/// Where a one-time-pad Pauli is inserted.
enum class PadSite : uint8_t {
    /// Right after preparation. Drawn from {I,Z}^n so it fixes |0...0>.
    Preparation,
    /// Before a TypeI layer. Drawn from {I,X,Y,Z}^n; after CZ propagation it is
    /// undone inside the next TypeII layer.
    Interior,
    /// After the final TypeII layer. Drawn from {I,X}^n and undone classically.
    Measurement,
};

/// Pad bookkeeping for one compiled circuit.
///
/// history holds the inserted pads in circuit order: the preparation pad, one
/// interior pad per TypeI layer, then the measurement pad. frame is the Pauli
/// still in effect at readout.
struct PauliFrame {
    PauliString frame;
    std::vector<PauliString> history;
};

struct CompiledCircuit {
    LayeredCircuit circuit;
    PauliFrame frame;
};

/// Source of pad Paulis; receives the qubit count and the insertion site.
using PadSampler = std::function<PauliString(size_t n, PadSite site)>;

/// Draws pads uniformly over the set allowed at each site.
PauliString draw_pad(size_t n, PadSite site, Rng &rng);

/// Dresses every TypeII layer with pads so that running the compiled circuit
/// and then applying undo_pad reproduces the statistics of c. TypeI layers and
/// the layer structure are unchanged; Clifford gates stay Clifford.
CompiledCircuit randomized_compile(const LayeredCircuit &c, Rng &rng);
CompiledCircuit randomized_compile(const LayeredCircuit &c, const PadSampler &pads);

/// s XOR (X part of frame.frame).
Bitstring undo_pad(const PauliFrame &frame, const Bitstring &s);

/// Same correction applied to a basis index.
uint64_t undo_pad_index(const PauliFrame &frame, uint64_t index);

/// Replays a pad history through the original circuit: the pad in flight is
/// pushed through each TypeI layer with conjugate_through_cz and is replaced
/// at each TypeII layer by the next inserted pad. Returns the Pauli in effect
/// at readout, which must equal the compiled frame.
PauliString replay_frame(const LayeredCircuit &original, const std::vector<PauliString> &history);

/// Single-qubit Pauli transfer matrix, R[i][j] = Tr(P_i E(P_j)) / 2 over
/// (I, X, Y, Z).
using Ptm = std::array<std::array<double, 4>, 4>;

/// PTM of the channel with the given Kraus operators.
Ptm ptm_from_kraus(const std::vector<Mat2> &kraus);

/// Average of P R P over the four single-qubit Paulis (as PTMs). The result
/// is diagonal: the Pauli-twirled channel. Throws std::invalid_argument if
/// the first row is not (1, 0, 0, 0).
Ptm twirl_channel_oracle(const Ptm &channel);

}  // namespace accredo
