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
#include <vector>

#include "accredo/circuit.h"
#include "accredo/noise.h"
#include "accredo/pauli_string.h"
#include "accredo/rng.h"

namespace accredo {

/// Basis a trap qubit is parked in just before a TypeI layer.
enum class TrapBasis : uint8_t { Z, X };

/// Clifford circuit sharing the target's TypeI layers that maps |0...0> to
/// itself. Before every TypeI layer each qubit sits in an eigenstate of Z or
/// X according to basis_plan, with at least one Z endpoint per CZ edge, so CZ
/// acts as a local Z byproduct and the state stays a product state.
struct TrapCircuit {
    LayeredCircuit circuit;
    /// basis_plan[k][q]: basis of qubit q entering TypeI layer k.
    std::vector<std::vector<TrapBasis>> basis_plan;
    /// byproducts[k]: Z corrections produced by TypeI layer k.
    std::vector<PauliString> byproducts;
};

/// Smallest M with M >= 2 ln(2/(1-alpha)) / theta^2.
size_t min_traps(double alpha, double theta);

/// Hoeffding half-width matching M traps at confidence alpha (inverse of min_traps).
double theta_for_traps(size_t traps, double alpha);

/// Builds a fresh random trap for target.
TrapCircuit generate_trap(const LayeredCircuit &target, Rng &rng);

/// Conservative TVD bound 2 (N_inc/M + theta/2), clamped to at most 1.
double tvd_bound(size_t n_inc, size_t traps, double theta);

/// Point-estimate TVD bound 2 N_inc/M, clamped to at most 1.
double tvd_point_bound(size_t n_inc, size_t traps);

/// Rule deciding whether a run is kept.
struct AcceptanceMode {
    enum class Kind : uint8_t {
        /// Keep runs whose TVD bound is <= epsilon.
        TvdBound,
        /// Keep runs where more than `cutoff` traps returned all-zeros.
        TrapCutoff,
    };

    Kind kind = Kind::TvdBound;
    double epsilon = 1;
    size_t cutoff = 0;
    /// Hoeffding half-width used for the reported bound.
    double theta = 1;
    /// false selects the point-estimate bound 2 N_inc/M.
    bool conservative = true;

    static AcceptanceMode tvd(double epsilon, double theta, bool conservative = true);
    static AcceptanceMode trap_cutoff(size_t cutoff, double theta);

    double bound(size_t n_inc, size_t traps) const;
    bool accepts(size_t n_inc, size_t traps) const;
    std::string name() const;
};

/// Outcome of one accreditation run.
struct RunRecord {
    size_t run_index = 0;
    int behaviour_label = 0;
    size_t nu = 0;
    size_t n_inc = 0;
    double tvd_bound = 0;
    bool accepted = false;
    Bitstring target_bits;
    int lambda = 1;
    /// Measurement pad of the target circuit, e.g. "+XIIX".
    std::string target_frame;
};

/// Target circuit with the observable's basis change folded in, checked once
/// and reused across runs.
struct PreparedTarget {
    LayeredCircuit circuit;
    PauliObservable observable;

    PreparedTarget(const LayeredCircuit &target, const PauliObservable &o);
};

/// One protocol run: M fresh traps plus the target at a uniformly random
/// position nu, each randomly compiled and sampled once under behaviour b.
RunRecord run_accreditation(const PreparedTarget &target, size_t traps, const NoiseBehaviour &b,
                            const AcceptanceMode &mode, Rng &rng);

RunRecord run_accreditation(const LayeredCircuit &target, const PauliObservable &o, size_t traps,
                            const NoiseBehaviour &b, const AcceptanceMode &mode, Rng &rng);

}  // namespace accredo
