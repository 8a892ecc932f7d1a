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

#include "accredo/accreditation.h"

#include <array>
#include <cmath>
#include <stdexcept>

#include "accredo/compiling.h"

namespace accredo {

namespace {

int slot(SignedPauli p) { return (p.letter - 1) * 2 + (p.negative ? 1 : 0); }

// movers[slot(from)][slot(to)] lists, in index order, the four Cliffords c
// with c from c^dag = to.
using MoverTable = std::array<std::array<std::array<uint8_t, 4>, 6>, 6>;

const MoverTable &movers() {
    static const MoverTable table = [] {
        MoverTable t{};
        std::array<std::array<int, 6>, 6> filled{};
        for (int from = 0; from < 6; ++from) {
            SignedPauli p{static_cast<uint8_t>(from / 2 + 1), from % 2 == 1};
            for (int i = 0; i < SingleQubitClifford::kCount; ++i) {
                int to = slot(SingleQubitClifford(i).conjugate(p));
                t[from][to][filled[from][to]++] = static_cast<uint8_t>(i);
            }
        }
        return t;
    }();
    return table;
}

SingleQubitClifford random_mover(SignedPauli from, SignedPauli to, Rng &rng) {
    return SingleQubitClifford(movers()[slot(from)][slot(to)][rng.uniform_below(4)]);
}

}  // namespace

size_t min_traps(double alpha, double theta) {
    if (!(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("alpha must lie in (0,1)");
    }
    if (!(theta > 0 && theta <= 1)) {
        throw std::invalid_argument("theta must lie in (0,1]");
    }
    return static_cast<size_t>(std::ceil(2 * std::log(2 / (1 - alpha)) / (theta * theta)));
}

double theta_for_traps(size_t traps, double alpha) {
    if (traps == 0) {
        throw std::invalid_argument("trap count must be positive");
    }
    if (!(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("alpha must lie in (0,1)");
    }
    return std::min(1.0, std::sqrt(2 * std::log(2 / (1 - alpha)) / static_cast<double>(traps)));
}

TrapCircuit generate_trap(const LayeredCircuit &target, Rng &rng) {
    require_valid(target);
    const size_t n = target.num_qubits;
    const size_t m = target.band_count();
    TrapCircuit trap;
    trap.circuit.num_qubits = n;
    trap.circuit.layers.reserve(target.layers.size());

    std::vector<SignedPauli> state(n, SignedPauli{3, false});
    std::vector<TrapBasis> plan(n);
    size_t band = 0;
    for (size_t k = 0; k < target.layers.size(); ++k) {
        const Layer &layer = target.layers[k];
        if (layer.kind == LayerKind::TypeI) {
            // CZ with a Z-basis control in |1> applies Z to its partner.
            PauliString byproduct(n);
            for (const auto &[u, v] : layer.edges) {
                for (auto [control, partner] : {std::pair{u, v}, std::pair{v, u}}) {
                    if (plan[control] == TrapBasis::Z && plan[partner] == TrapBasis::X && state[control].negative) {
                        byproduct.set(partner, false, true);
                        state[partner].negative = !state[partner].negative;
                    }
                }
            }
            trap.byproducts.push_back(std::move(byproduct));
            trap.circuit.layers.push_back(layer);
            continue;
        }

        std::vector<Gate> gates(n);
        if (band + 1 == m) {
            for (size_t q = 0; q < n; ++q) {
                gates[q] = random_mover(state[q], SignedPauli{3, false}, rng);
                state[q] = SignedPauli{3, false};
            }
        } else {
            const Layer &next = target.layers[k + 1];
            for (size_t q = 0; q < n; ++q) {
                plan[q] = rng.uniform_below(2) ? TrapBasis::X : TrapBasis::Z;
            }
            for (const auto &[u, v] : next.edges) {
                if (plan[u] == TrapBasis::X && plan[v] == TrapBasis::X) {
                    plan[std::min(u, v)] = TrapBasis::Z;
                }
            }
            for (size_t q = 0; q < n; ++q) {
                SignedPauli goal{static_cast<uint8_t>(plan[q] == TrapBasis::X ? 1 : 3), rng.uniform_below(2) == 1};
                gates[q] = random_mover(state[q], goal, rng);
                state[q] = goal;
            }
            trap.basis_plan.push_back(plan);
        }
        trap.circuit.layers.push_back(Layer::single(std::move(gates)));
        ++band;
    }
    return trap;
}

double tvd_bound(size_t n_inc, size_t traps, double theta) {
    if (traps == 0 || n_inc > traps) {
        throw std::invalid_argument("tvd_bound needs 0 <= N_inc <= M and M >= 1");
    }
    if (!(theta > 0 && theta <= 1)) {
        throw std::invalid_argument("theta must lie in (0,1]");
    }
    double bound = 2 * (static_cast<double>(n_inc) / static_cast<double>(traps) + theta / 2);
    return std::min(bound, 1.0);
}

double tvd_point_bound(size_t n_inc, size_t traps) {
    if (traps == 0 || n_inc > traps) {
        throw std::invalid_argument("tvd_point_bound needs 0 <= N_inc <= M and M >= 1");
    }
    return std::min(2 * static_cast<double>(n_inc) / static_cast<double>(traps), 1.0);
}

AcceptanceMode AcceptanceMode::tvd(double epsilon, double theta, bool conservative) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw std::invalid_argument("epsilon must lie in [0,1]");
    }
    if (!(theta > 0 && theta <= 1)) {
        throw std::invalid_argument("theta must lie in (0,1]");
    }
    AcceptanceMode mode;
    mode.kind = Kind::TvdBound;
    mode.epsilon = epsilon;
    mode.theta = theta;
    mode.conservative = conservative;
    return mode;
}

AcceptanceMode AcceptanceMode::trap_cutoff(size_t cutoff, double theta) {
    if (!(theta > 0 && theta <= 1)) {
        throw std::invalid_argument("theta must lie in (0,1]");
    }
    AcceptanceMode mode;
    mode.kind = Kind::TrapCutoff;
    mode.cutoff = cutoff;
    mode.theta = theta;
    return mode;
}

double AcceptanceMode::bound(size_t n_inc, size_t traps) const {
    return conservative ? tvd_bound(n_inc, traps, theta) : tvd_point_bound(n_inc, traps);
}

bool AcceptanceMode::accepts(size_t n_inc, size_t traps) const {
    if (kind == Kind::TrapCutoff) {
        return traps - n_inc > cutoff;
    }
    return bound(n_inc, traps) <= epsilon;
}

std::string AcceptanceMode::name() const { return kind == Kind::TrapCutoff ? "trap_cutoff" : "tvd_bound"; }

PreparedTarget::PreparedTarget(const LayeredCircuit &target, const PauliObservable &o)
    : circuit(absorb_measurement_basis(target, o)), observable(o) {}

RunRecord run_accreditation(const PreparedTarget &target, size_t traps, const NoiseBehaviour &b,
                            const AcceptanceMode &mode, Rng &rng) {
    if (traps == 0) {
        throw std::invalid_argument("accreditation needs at least one trap");
    }
    const LayeredCircuit &circuit = target.circuit;
    const size_t n = circuit.num_qubits;
    ShotSampler sampler(n);
    RunRecord record;
    record.behaviour_label = b.label;
    record.nu = static_cast<size_t>(rng.uniform_below(traps + 1));
    for (size_t i = 0; i <= traps; ++i) {
        if (i == record.nu) {
            CompiledCircuit compiled = randomized_compile(circuit, rng);
            uint64_t raw = sampler.sample(compiled.circuit, b, rng);
            record.target_bits = bits_from_index(undo_pad_index(compiled.frame, raw), n);
            record.target_frame = compiled.frame.frame.str();
            continue;
        }
        TrapCircuit trap = generate_trap(circuit, rng);
        CompiledCircuit compiled = randomized_compile(trap.circuit, rng);
        uint64_t outcome = undo_pad_index(compiled.frame, sampler.sample(compiled.circuit, b, rng));
        record.n_inc += outcome != 0;
    }
    record.tvd_bound = mode.bound(record.n_inc, traps);
    record.accepted = mode.accepts(record.n_inc, traps);
    record.lambda = eigenvalue_from_bitstring(target.observable, record.target_bits);
    return record;
}

RunRecord run_accreditation(const LayeredCircuit &target, const PauliObservable &o, size_t traps,
                            const NoiseBehaviour &b, const AcceptanceMode &mode, Rng &rng) {
    PreparedTarget prepared(target, o);
    check_bound(prepared.circuit, b);
    return run_accreditation(prepared, traps, b, mode, rng);
}

}  // namespace accredo
