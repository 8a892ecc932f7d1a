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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace accredo {

/// Qubit pair acted on by a CZ gate.
using Edge = std::pair<uint32_t, uint32_t>;

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Each P_q is one of the literal matrices I, X, Y, Z, stored in symplectic
/// form as bits (x_q, z_q): I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). The phase is
/// an exponent of i modulo 4. Global phase never affects measurement
/// statistics but is tracked exactly so that products are exact.
class PauliString {
   public:
    /// Identity on n qubits. n must be at least 1.
    explicit PauliString(size_t n);

    /// Parses e.g. "+XIZY", "-iZZ", "XZ" (sign optional). Qubit 0 is leftmost.
    /// '_' is accepted as an alias for 'I'.
    static PauliString from_str(std::string_view text);

    size_t num_qubits() const { return n_; }
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t log_i) { phase_ = log_i & 3; }

    bool x(size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
    bool z(size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
    void set(size_t q, bool x_bit, bool z_bit);

    /// Letter code at qubit q: 0=I, 1=X, 2=Y, 3=Z.
    int letter(size_t q) const;
    void set_letter(size_t q, int letter);

    /// True if every qubit carries the identity (phase is ignored).
    bool is_identity_up_to_phase() const;
    size_t weight() const;

    /// X part as a basis-index mask (bit q = x_q). Requires n <= 64.
    uint64_t x_mask() const;
    /// Z part as a basis-index mask (bit q = z_q). Requires n <= 64.
    uint64_t z_mask() const;

    std::span<const uint64_t> x_words() const { return x_; }
    std::span<const uint64_t> z_words() const { return z_; }

    /// Text form: sign ("+", "-", "+i", "-i") followed by one letter per qubit.
    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t n_;
    uint8_t phase_ = 0;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;

    friend PauliString pauli_mul(const PauliString &a, const PauliString &b);
};

/// Operator product a*b including phase. Throws std::invalid_argument on a
/// qubit-count mismatch.
PauliString pauli_mul(const PauliString &a, const PauliString &b);

/// Checks that edges are pairs of distinct in-range qubits and that no qubit
/// appears twice. Throws std::invalid_argument otherwise.
void check_edges(std::span<const Edge> edges, size_t n);

/// Returns CZ(E) p CZ(E) for the disjoint edge set E.
PauliString conjugate_through_cz(const PauliString &p, std::span<const Edge> edges);

/// True when a and b commute.
bool commutes(const PauliString &a, const PauliString &b);

}  // namespace accredo
