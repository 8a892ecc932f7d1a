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

#include "accredo/statevector.h"

#include <bit>
#include <stdexcept>

namespace accredo {

namespace {

void check_dense(size_t n) {
    if (n == 0 || n > kMaxDenseQubits) {
        throw std::invalid_argument("dense simulation supports 1.." + std::to_string(kMaxDenseQubits) +
                                    " qubits, got " + std::to_string(n));
    }
}

}  // namespace

StateVector::StateVector(size_t n, const kernels::KernelTable &k) : n_(n), kernels_(&k) {
    check_dense(n);
    amps_.assign(size_t{1} << n, Complex{0, 0});
    amps_[0] = 1;
}

void StateVector::reset() {
    std::fill(amps_.begin(), amps_.end(), Complex{0, 0});
    amps_[0] = 1;
}

void StateVector::assign(std::span<const Complex> amps) {
    if (amps.size() != amps_.size()) {
        throw std::invalid_argument("amplitude count does not match 2^n");
    }
    std::copy(amps.begin(), amps.end(), amps_.begin());
}

void StateVector::apply_gate(size_t q, const Mat2 &m) { kernels_->apply_1q(amps_, q, m); }

void StateVector::apply_cz(size_t a, size_t b) { kernels_->apply_cz(amps_, a, b); }

void StateVector::apply_layer(const Layer &layer) {
    if (layer.kind == LayerKind::TypeI) {
        for (const auto &[a, b] : layer.edges) {
            apply_cz(a, b);
        }
        return;
    }
    for (size_t q = 0; q < layer.gates.size(); ++q) {
        const Gate &g = layer.gates[q];
        if (g.is_clifford() && g.clifford() == SingleQubitClifford::identity()) {
            continue;
        }
        apply_gate(q, g.matrix());
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli and state qubit counts differ");
    }
    const uint64_t xm = p.x_mask();
    const uint64_t zm = p.z_mask();
    if ((xm | zm) == 0) {
        return;
    }
    // P|j> = i^(phase + #Y) (-1)^{|j & z|} |j ^ x>.
    static constexpr Complex kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex global = kPowers[(p.phase() + std::popcount(xm & zm)) & 3];
    std::vector<Complex> &next = scratch_;
    next.resize(amps_.size());
    for (size_t j = 0; j < amps_.size(); ++j) {
        Complex v = amps_[j];
        if (std::popcount(j & zm) & 1) {
            v = -v;
        }
        next[j ^ xm] = global * v;
    }
    amps_.swap(next);
}

void StateVector::probabilities(std::vector<double> &out) const {
    out.resize(amps_.size());
    kernels_->abs2(amps_, out);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out;
    probabilities(out);
    return out;
}

uint64_t StateVector::sample(Rng &rng, std::vector<double> &scratch) const {
    probabilities(scratch);
    return sample_index(scratch, rng);
}

uint64_t sample_index(std::span<const double> probs, Rng &rng) {
    double target = rng.uniform01();
    double acc = 0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0) {
            continue;
        }
        last_nonzero = i;
        acc += probs[i];
        if (target < acc) {
            return i;
        }
    }
    // Rounding left the total slightly below the draw.
    return last_nonzero;
}

std::vector<Complex> simulate_ideal(const LayeredCircuit &c) {
    require_valid(c);
    check_dense(c.num_qubits);
    StateVector state(c.num_qubits);
    for (const auto &layer : c.layers) {
        state.apply_layer(layer);
    }
    return {state.amplitudes().begin(), state.amplitudes().end()};
}

std::vector<double> ideal_distribution(const LayeredCircuit &c) {
    auto amps = simulate_ideal(c);
    std::vector<double> probs(amps.size());
    kernels::active().abs2(amps, probs);
    return probs;
}

double expectation_from_distribution(std::span<const double> probs, const PauliObservable &o) {
    if (probs.size() != (size_t{1} << o.num_qubits())) {
        throw std::invalid_argument("distribution size does not match observable");
    }
    double total = 0;
    for (size_t s = 0; s < probs.size(); ++s) {
        total += eigenvalue_from_index(o, s) * probs[s];
    }
    return total;
}

}  // namespace accredo
