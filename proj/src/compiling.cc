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

#include "accredo/compiling.h"

#include <cmath>
#include <stdexcept>

namespace accredo {

PauliString draw_pad(size_t n, PadSite site, Rng &rng) {
    PauliString pad(n);
    for (size_t q = 0; q < n; ++q) {
        switch (site) {
            case PadSite::Preparation:
                pad.set_letter(q, rng.uniform_below(2) ? 3 : 0);
                break;
            case PadSite::Interior:
                pad.set_letter(q, static_cast<int>(rng.uniform_below(4)));
                break;
            case PadSite::Measurement:
                pad.set_letter(q, rng.uniform_below(2) ? 1 : 0);
                break;
        }
    }
    return pad;
}

CompiledCircuit randomized_compile(const LayeredCircuit &c, Rng &rng) {
    return randomized_compile(c, [&rng](size_t n, PadSite site) { return draw_pad(n, site, rng); });
}

CompiledCircuit randomized_compile(const LayeredCircuit &c, const PadSampler &pads) {
    require_valid(c);
    const size_t n = c.num_qubits;
    const size_t m = c.band_count();
    CompiledCircuit out{c, PauliFrame{PauliString(n), {}}};
    out.frame.history.reserve(m + 1);

    PauliString in_flight = pads(n, PadSite::Preparation);
    out.frame.history.push_back(in_flight);
    size_t band = 0;
    for (auto &layer : out.circuit.layers) {
        if (layer.kind == LayerKind::TypeI) {
            in_flight = conjugate_through_cz(in_flight, layer.edges);
            continue;
        }
        PauliString outgoing = pads(n, band + 1 < m ? PadSite::Interior : PadSite::Measurement);
        if (outgoing.num_qubits() != n) {
            throw std::invalid_argument("pad sampler returned a Pauli of the wrong size");
        }
        out.frame.history.push_back(outgoing);
        // Dressed gate = outgoing * U * incoming; the incoming Pauli cancels
        // the pad that arrived from the previous layer.
        for (size_t q = 0; q < n; ++q) {
            int before = in_flight.letter(q);
            int after = outgoing.letter(q);
            if (before == 0 && after == 0) {
                continue;
            }
            Gate &g = layer.gates[q];
            if (g.is_clifford()) {
                g = compose(SingleQubitClifford::pauli(after),
                            compose(g.clifford(), SingleQubitClifford::pauli(before)));
            } else {
                g = Gate(mat2_mul(pauli_matrix(after), mat2_mul(g.matrix(), pauli_matrix(before))));
            }
        }
        in_flight = std::move(outgoing);
        ++band;
    }
    out.frame.frame = in_flight;
    return out;
}

Bitstring undo_pad(const PauliFrame &frame, const Bitstring &s) {
    if (s.size() != frame.frame.num_qubits()) {
        throw std::invalid_argument("undo_pad: bitstring length " + std::to_string(s.size()) +
                                    " does not match frame on " + std::to_string(frame.frame.num_qubits()) +
                                    " qubits");
    }
    Bitstring out = s;
    for (size_t q = 0; q < s.size(); ++q) {
        out[q] ^= static_cast<uint8_t>(frame.frame.x(q));
    }
    return out;
}

uint64_t undo_pad_index(const PauliFrame &frame, uint64_t index) { return index ^ frame.frame.x_mask(); }

PauliString replay_frame(const LayeredCircuit &original, const std::vector<PauliString> &history) {
    if (history.size() != original.band_count() + 1) {
        throw std::invalid_argument("pad history length does not match the circuit");
    }
    PauliString in_flight = history.front();
    size_t next = 1;
    for (const auto &layer : original.layers) {
        if (layer.kind == LayerKind::TypeI) {
            in_flight = conjugate_through_cz(in_flight, layer.edges);
        } else {
            in_flight = history[next++];
        }
    }
    return in_flight;
}

Ptm ptm_from_kraus(const std::vector<Mat2> &kraus) {
    Ptm r{};
    for (int j = 0; j < 4; ++j) {
        Mat2 image{};
        for (const Mat2 &k : kraus) {
            Mat2 term = mat2_mul(mat2_mul(k, pauli_matrix(j)), mat2_adjoint(k));
            for (int e = 0; e < 4; ++e) {
                image[e] += term[e];
            }
        }
        for (int i = 0; i < 4; ++i) {
            Mat2 prod = mat2_mul(pauli_matrix(i), image);
            r[i][j] = 0.5 * (prod[0] + prod[3]).real();
        }
    }
    return r;
}

Ptm twirl_channel_oracle(const Ptm &channel) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (!std::isfinite(channel[i][j])) {
                throw std::invalid_argument("PTM has a non-finite entry");
            }
        }
    }
    if (std::abs(channel[0][0] - 1) > 1e-12 || std::abs(channel[0][1]) > 1e-12 || std::abs(channel[0][2]) > 1e-12 ||
        std::abs(channel[0][3]) > 1e-12) {
        throw std::invalid_argument("PTM first row must be (1, 0, 0, 0)");
    }
    // Conjugation by Pauli a multiplies basis element i by +1 if they commute.
    auto sign = [](int a, int i) { return (a == 0 || i == 0 || a == i) ? 1.0 : -1.0; };
    Ptm out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double acc = 0;
            for (int a = 0; a < 4; ++a) {
                acc += sign(a, i) * channel[i][j] * sign(a, j);
            }
            out[i][j] = acc / 4;
        }
    }
    return out;
}

}  // namespace accredo
