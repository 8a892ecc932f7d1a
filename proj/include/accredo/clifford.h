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
#include <cstdint>
#include <string>

#include "accredo/mat2.h"

namespace accredo {

/// Single-qubit Pauli with a sign: letter 0=I, 1=X, 2=Y, 3=Z.
struct SignedPauli {
    uint8_t letter = 0;
    bool negative = false;

    bool operator==(const SignedPauli &) const = default;
    std::string str() const;
};

/// Element of the 24-element single-qubit Clifford group (modulo phase).
///
/// Index order is frozen. The table is the breadth-first enumeration of words
/// in the generators H then S starting from the identity, where appending a
/// generator G to element U yields G*U:
///
///   index  X image  Z image      index  X image  Z image
///   0      +X       +Z           12     +X       -Z
///   1      +Z       +X           13     +Z       -Y
///   2      +Y       +Z           14     +Y       -X
///   3      +Z       +Y           15     -Z       +Y
///   4      -Y       +X           16     -X       +Y
///   5      -X       +Z           17     +Y       -Z
///   6      +X       -Y           18     -Y       -Z
///   7      +Z       -X           19     -X       -Y
///   8      +X       +Y           20     -Z       -X
///   9      -Z       +X           21     -Z       -Y
///   10     -Y       +Z           22     -Y       -X
///   11     +Y       +X           23     -X       -Z
///
/// Seeded trap generation indexes into this table, so reordering it changes
/// seeded outputs.
class SingleQubitClifford {
   public:
    static constexpr int kCount = 24;

    constexpr SingleQubitClifford() = default;
    explicit SingleQubitClifford(int index);

    static SingleQubitClifford identity() { return SingleQubitClifford(0); }
    static SingleQubitClifford hadamard();
    static SingleQubitClifford phase_s();
    /// Clifford equal (up to phase) to the Pauli with letter 0..3.
    static SingleQubitClifford pauli(int letter);
    /// Element whose conjugation action sends X to x_image and Z to z_image.
    /// Throws std::invalid_argument if no such element exists.
    static SingleQubitClifford from_action(SignedPauli x_image, SignedPauli z_image);

    int index() const { return index_; }
    SignedPauli x_image() const;
    SignedPauli z_image() const;
    /// A unitary representative of this element.
    const Mat2 &unitary() const;

    /// Returns U p U^dagger.
    SignedPauli conjugate(SignedPauli p) const;

    SingleQubitClifford inverse() const;

    bool operator==(const SingleQubitClifford &) const = default;

   private:
    uint8_t index_ = 0;
};

/// Element acting as a*b (b applied first).
SingleQubitClifford compose(SingleQubitClifford a, SingleQubitClifford b);

/// Returns c p c^dagger with sign.
inline SignedPauli conjugate_through_clifford(SingleQubitClifford c, SignedPauli p) { return c.conjugate(p); }

/// Product of two single-qubit literal Paulis: returns the letter of a*b and
/// writes the phase exponent of i into log_i.
int single_pauli_product(int a, int b, int &log_i);

}  // namespace accredo
