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

#include "accredo/noise.h"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace accredo {

namespace {

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

}  // namespace

FaultSpec FaultSpec::depolarizing(double p, std::vector<uint32_t> support) {
    FaultSpec spec;
    spec.p_fault = p;
    spec.kind = Kind::Depolarizing;
    spec.support = std::move(support);
    return spec;
}

FaultSpec FaultSpec::explicit_paulis(double p, std::vector<std::pair<PauliString, double>> weighted) {
    FaultSpec spec;
    spec.p_fault = p;
    spec.kind = Kind::Explicit;
    spec.weighted = std::move(weighted);
    return spec;
}

PauliString FaultSpec::sample_pauli(size_t n, Rng &rng) const {
    PauliString out(n);
    if (kind == Kind::Depolarizing) {
        if (support.empty()) {
            for (size_t q = 0; q < n; ++q) {
                out.set_letter(q, static_cast<int>(rng.uniform_below(4)));
            }
        } else {
            for (uint32_t q : support) {
                out.set_letter(q, static_cast<int>(rng.uniform_below(4)));
            }
        }
        return out;
    }
    double target = rng.uniform01();
    double acc = 0;
    for (const auto &[pauli, weight] : weighted) {
        acc += weight;
        if (target < acc) {
            return pauli;
        }
    }
    return weighted.back().first;
}

void validate_fault(const FaultSpec &spec, size_t n, const std::string &field) {
    if (!(spec.p_fault >= 0 && spec.p_fault <= 1)) {
        throw std::invalid_argument(field + ".p: probability " + short_number(spec.p_fault) + " outside [0,1]");
    }
    if (spec.kind == FaultSpec::Kind::Depolarizing) {
        std::vector<bool> seen(n, false);
        for (uint32_t q : spec.support) {
            if (q >= n) {
                throw std::invalid_argument(field + ".qubits: qubit " + std::to_string(q) + " out of range");
            }
            if (seen[q]) {
                throw std::invalid_argument(field + ".qubits: qubit " + std::to_string(q) + " repeated");
            }
            seen[q] = true;
        }
        return;
    }
    if (spec.weighted.empty()) {
        throw std::invalid_argument(field + ".paulis: explicit distribution is empty");
    }
    double total = 0;
    for (size_t k = 0; k < spec.weighted.size(); ++k) {
        const auto &[pauli, weight] = spec.weighted[k];
        std::string entry = field + ".paulis[" + std::to_string(k) + "]";
        if (pauli.num_qubits() != n) {
            throw std::invalid_argument(entry + ": Pauli acts on " + std::to_string(pauli.num_qubits()) +
                                        " qubits, expected " + std::to_string(n));
        }
        if (pauli.is_identity_up_to_phase()) {
            throw std::invalid_argument(entry + ": identity is not a fault");
        }
        if (!(weight >= 0)) {
            throw std::invalid_argument(entry + ": negative weight");
        }
        total += weight;
    }
    if (std::abs(total - 1) > 1e-9) {
        throw std::invalid_argument(field + ".paulis: weights sum to " + short_number(total) + ", expected 1");
    }
}

const NoiseBehaviour &BehaviourSet::by_label(int label) const {
    for (const auto &b : behaviours) {
        if (b.label == label) {
            return b;
        }
    }
    throw std::out_of_range("no behaviour with label " + std::to_string(label));
}

namespace {

void check_counts(const LayeredCircuit &c, const NoiseBehaviour &b) {
    size_t m = c.band_count();
    if (b.type_two.size() != m || b.type_one.size() != c.layers.size() - m) {
        throw std::invalid_argument("behaviour " + std::to_string(b.label) + " has " +
                                    std::to_string(b.type_two.size()) + " TypeII / " +
                                    std::to_string(b.type_one.size()) + " TypeI faults; circuit has " +
                                    std::to_string(m) + " / " + std::to_string(c.layers.size() - m) + " layers");
    }
}

}  // namespace

void check_bound(const LayeredCircuit &c, const NoiseBehaviour &b) {
    check_counts(c, b);
    const size_t n = c.num_qubits;
    std::string base = "behaviour " + std::to_string(b.label);
    validate_fault(b.prep, n, base + ".prep");
    validate_fault(b.meas, n, base + ".meas");
    for (size_t k = 0; k < b.type_one.size(); ++k) {
        validate_fault(b.type_one[k], n, base + ".type_one[" + std::to_string(k) + "]");
    }
    for (size_t k = 0; k < b.type_two.size(); ++k) {
        validate_fault(b.type_two[k], n, base + ".type_two[" + std::to_string(k) + "]");
    }
}

void validate_behaviour_set(const BehaviourSet &set, size_t n) {
    if (set.behaviours.empty()) {
        throw std::invalid_argument("behaviour set is empty");
    }
    for (size_t i = 0; i < set.behaviours.size(); ++i) {
        const auto &b = set.behaviours[i];
        for (size_t j = 0; j < i; ++j) {
            if (set.behaviours[j].label == b.label) {
                throw std::invalid_argument("behaviours[" + std::to_string(i) + "].label: duplicate label " +
                                            std::to_string(b.label));
            }
        }
        std::string base = "behaviours[" + std::to_string(i) + "]";
        validate_fault(b.prep, n, base + ".prep");
        validate_fault(b.meas, n, base + ".meas");
        for (size_t k = 0; k < b.type_one.size(); ++k) {
            validate_fault(b.type_one[k], n, base + ".type_one[" + std::to_string(k) + "]");
        }
        for (size_t k = 0; k < b.type_two.size(); ++k) {
            validate_fault(b.type_two[k], n, base + ".type_two[" + std::to_string(k) + "]");
        }
    }
}

NoiseBehaviour uniform_behaviour(int label, const LayeredCircuit &c, const FaultSpec &spec) {
    NoiseBehaviour b;
    b.label = label;
    b.prep = spec;
    b.meas = spec;
    size_t m = c.band_count();
    b.type_two.assign(m, spec);
    b.type_one.assign(c.layers.size() - m, spec);
    return b;
}

NoiseBehaviour global_depolarizing_behaviour(int label, const LayeredCircuit &c, double p_err) {
    if (!(p_err >= 0 && p_err <= 1)) {
        throw std::invalid_argument("p_err outside [0,1]");
    }
    double locations = static_cast<double>(c.layers.size() + 2);
    double per_location = 1 - std::pow(1 - p_err, 1 / locations);
    return uniform_behaviour(label, c, FaultSpec::depolarizing(per_location));
}

double p_err_of(const NoiseBehaviour &b) {
    double clean = (1 - b.prep.p_fault) * (1 - b.meas.p_fault);
    for (const auto &f : b.type_two) {
        clean *= 1 - f.p_fault;
    }
    for (const auto &f : b.type_one) {
        clean *= 1 - f.p_fault;
    }
    return 1 - clean;
}

double p_err_of(const LayeredCircuit &c, const NoiseBehaviour &b) {
    check_counts(c, b);
    return p_err_of(b);
}

ShotSampler::ShotSampler(size_t n) : state_(n) {}

uint64_t ShotSampler::sample(const LayeredCircuit &c, const NoiseBehaviour &b, Rng &rng) {
    check_counts(c, b);
    const size_t n = c.num_qubits;
    if (n != state_.num_qubits()) {
        throw std::invalid_argument("ShotSampler qubit count differs from circuit");
    }
    auto fire = [&](const FaultSpec &spec) {
        if (rng.bernoulli(spec.p_fault)) {
            state_.apply_pauli(spec.sample_pauli(n, rng));
        }
    };
    state_.reset();
    fire(b.prep);
    size_t one = 0;
    size_t two = 0;
    for (const auto &layer : c.layers) {
        state_.apply_layer(layer);
        fire(layer.kind == LayerKind::TypeII ? b.type_two[two++] : b.type_one[one++]);
    }
    uint64_t outcome = state_.sample(rng, probs_);
    if (rng.bernoulli(b.meas.p_fault)) {
        // Only the X part of a readout fault changes Z-basis statistics.
        outcome ^= b.meas.sample_pauli(n, rng).x_mask();
    }
    return outcome;
}

Bitstring sample_shot(const LayeredCircuit &c, const NoiseBehaviour &b, Rng &rng) {
    require_valid(c);
    ShotSampler sampler(c.num_qubits);
    return bits_from_index(sampler.sample(c, b, rng), c.num_qubits);
}

std::vector<uint64_t> sample_histogram(const LayeredCircuit &c, const NoiseBehaviour &b, uint64_t seed,
                                       uint64_t stream, size_t shots) {
    require_valid(c);
    check_bound(c, b);
    ShotSampler sampler(c.num_qubits);
    std::vector<uint64_t> counts(size_t{1} << c.num_qubits, 0);
    for (size_t k = 0; k < shots; ++k) {
        Rng rng(derive_seed(seed, stream, k));
        ++counts[sampler.sample(c, b, rng)];
    }
    return counts;
}

namespace {

// Density matrix stored as a 2n-qubit vector: bits 0..n-1 index the row,
// bits n..2n-1 the column. U rho U^dag then acts as U on the row bits and
// conj(U) on the column bits.
class DensityMatrix {
   public:
    explicit DensityMatrix(size_t n) : n_(n), vec_(2 * n, kernels::scalar()) {}

    void apply_layer(const Layer &layer) {
        if (layer.kind == LayerKind::TypeI) {
            for (const auto &[a, b] : layer.edges) {
                vec_.apply_cz(a, b);
                vec_.apply_cz(a + n_, b + n_);
            }
            return;
        }
        for (size_t q = 0; q < layer.gates.size(); ++q) {
            Mat2 u = layer.gates[q].matrix();
            Mat2 u_conj{std::conj(u[0]), std::conj(u[1]), std::conj(u[2]), std::conj(u[3])};
            vec_.apply_gate(q, u);
            vec_.apply_gate(q + n_, u_conj);
        }
    }

    void apply_channel(const FaultSpec &spec) {
        if (spec.p_fault == 0) {
            return;
        }
        std::vector<Complex> before(vec_.amplitudes().begin(), vec_.amplitudes().end());
        std::vector<Complex> fired(before.size(), Complex{0, 0});
        if (spec.kind == FaultSpec::Kind::Depolarizing) {
            std::vector<uint32_t> support = spec.support;
            if (support.empty()) {
                for (uint32_t q = 0; q < n_; ++q) {
                    support.push_back(q);
                }
            }
            fired = before;
            for (uint32_t q : support) {
                std::vector<Complex> acc(fired.size(), Complex{0, 0});
                for (int letter = 0; letter < 4; ++letter) {
                    PauliString p(n_);
                    p.set_letter(q, letter);
                    auto term = conjugated(fired, p);
                    for (size_t i = 0; i < acc.size(); ++i) {
                        acc[i] += 0.25 * term[i];
                    }
                }
                fired = std::move(acc);
            }
        } else {
            for (const auto &[pauli, weight] : spec.weighted) {
                auto term = conjugated(before, pauli);
                for (size_t i = 0; i < fired.size(); ++i) {
                    fired[i] += weight * term[i];
                }
            }
        }
        for (size_t i = 0; i < before.size(); ++i) {
            before[i] = (1 - spec.p_fault) * before[i] + spec.p_fault * fired[i];
        }
        load(before);
    }

    std::vector<double> diagonal() const {
        auto amps = vec_.amplitudes();
        std::vector<double> diag(size_t{1} << n_);
        for (size_t i = 0; i < diag.size(); ++i) {
            diag[i] = amps[i | (i << n_)].real();
        }
        return diag;
    }

   private:
    std::vector<Complex> conjugated(const std::vector<Complex> &rho, const PauliString &p) {
        // P rho P^dag = (P on rows)(conj(P) on columns). conj(Y) = -Y, and the
        // phase below makes the overall factor exactly 1.
        PauliString doubled(2 * n_);
        int y_count = 0;
        for (size_t q = 0; q < n_; ++q) {
            doubled.set_letter(q, p.letter(q));
            doubled.set_letter(q + n_, p.letter(q));
            y_count += p.letter(q) == 2;
        }
        doubled.set_phase(static_cast<uint8_t>((2 * y_count) & 3));
        load(rho);
        vec_.apply_pauli(doubled);
        return {vec_.amplitudes().begin(), vec_.amplitudes().end()};
    }

    void load(const std::vector<Complex> &rho) { vec_.assign(rho); }

    size_t n_;
    StateVector vec_;
};

}  // namespace

std::vector<double> exact_noisy_distribution(const LayeredCircuit &c, const NoiseBehaviour &b) {
    require_valid(c);
    check_bound(c, b);
    const size_t n = c.num_qubits;
    if (n > kOracleMaxQubits || b.location_count() > kOracleMaxLocations) {
        throw std::invalid_argument("exact oracle limited to " + std::to_string(kOracleMaxQubits) + " qubits and " +
                                    std::to_string(kOracleMaxLocations) + " fault locations");
    }
    DensityMatrix rho(n);
    rho.apply_channel(b.prep);
    size_t one = 0;
    size_t two = 0;
    for (const auto &layer : c.layers) {
        rho.apply_layer(layer);
        rho.apply_channel(layer.kind == LayerKind::TypeII ? b.type_two[two++] : b.type_one[one++]);
    }
    std::vector<double> probs = rho.diagonal();
    const FaultSpec &meas = b.meas;
    if (meas.p_fault == 0) {
        return probs;
    }
    // Readout faults act as classical flips by the X part of the Pauli.
    std::vector<std::pair<uint64_t, double>> masks;
    if (meas.kind == FaultSpec::Kind::Depolarizing) {
        uint64_t support = 0;
        if (meas.support.empty()) {
            support = (uint64_t{1} << n) - 1;
        } else {
            for (uint32_t q : meas.support) {
                support |= uint64_t{1} << q;
            }
        }
        double weight = 1.0 / static_cast<double>(uint64_t{1} << std::popcount(support));
        // Enumerate submasks of support.
        uint64_t sub = 0;
        do {
            masks.emplace_back(sub, weight);
            sub = (sub - support) & support;
        } while (sub != 0);
    } else {
        for (const auto &[pauli, weight] : meas.weighted) {
            masks.emplace_back(pauli.x_mask(), weight);
        }
    }
    std::vector<double> out(probs.size(), 0);
    for (size_t s = 0; s < probs.size(); ++s) {
        double flipped = 0;
        for (const auto &[mask, weight] : masks) {
            flipped += weight * probs[s ^ mask];
        }
        out[s] = (1 - meas.p_fault) * probs[s] + meas.p_fault * flipped;
    }
    return out;
}

double exact_noisy_expectation(const LayeredCircuit &c, const NoiseBehaviour &b, const PauliObservable &o) {
    LayeredCircuit rotated = absorb_measurement_basis(c, o);
    return expectation_from_distribution(exact_noisy_distribution(rotated, b), o);
}

double ideal_expectation(const LayeredCircuit &c, const PauliObservable &o) {
    LayeredCircuit rotated = absorb_measurement_basis(c, o);
    return expectation_from_distribution(ideal_distribution(rotated), o);
}

}  // namespace accredo
