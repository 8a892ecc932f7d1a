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

#include "accredo/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace accredo {

namespace {

size_t word_count(size_t n) { return (n + 63) / 64; }

}  // namespace

PauliString::PauliString(size_t n) : n_(n), x_(word_count(n), 0), z_(word_count(n), 0) {
    if (n == 0) {
        throw std::invalid_argument("PauliString needs at least one qubit");
    }
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
        if (!text.empty() && text.front() == 'i') {
            phase = (phase + 1) & 3;
            text.remove_prefix(1);
        }
    }
    if (text.empty()) {
        throw std::invalid_argument("Pauli string has no qubits");
    }
    PauliString result(text.size());
    result.phase_ = phase;
    for (size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set(q, true, false);
                break;
            case 'Y':
                result.set(q, true, true);
                break;
            case 'Z':
                result.set(q, false, true);
                break;
            default:
                throw std::invalid_argument("Unrecognized Pauli letter '" + std::string(1, text[q]) + "'");
        }
    }
    return result;
}

void PauliString::set(size_t q, bool x_bit, bool z_bit) {
    uint64_t bit = uint64_t{1} << (q & 63);
    x_[q >> 6] = x_bit ? (x_[q >> 6] | bit) : (x_[q >> 6] & ~bit);
    z_[q >> 6] = z_bit ? (z_[q >> 6] | bit) : (z_[q >> 6] & ~bit);
}

int PauliString::letter(size_t q) const {
    bool xb = x(q);
    bool zb = z(q);
    if (xb) {
        return zb ? 2 : 1;
    }
    return zb ? 3 : 0;
}

void PauliString::set_letter(size_t q, int letter) {
    set(q, letter == 1 || letter == 2, letter == 2 || letter == 3);
}

bool PauliString::is_identity_up_to_phase() const {
    for (size_t k = 0; k < x_.size(); ++k) {
        if (x_[k] | z_[k]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < x_.size(); ++k) {
        w += std::popcount(x_[k] | z_[k]);
    }
    return w;
}

uint64_t PauliString::x_mask() const {
    if (n_ > 64) {
        throw std::out_of_range("x_mask needs n <= 64");
    }
    return x_[0];
}

uint64_t PauliString::z_mask() const {
    if (n_ > 64) {
        throw std::out_of_range("z_mask needs n <= 64");
    }
    return z_[0];
}

std::string PauliString::str() const {
    static constexpr const char *kSigns[] = {"+", "+i", "-", "-i"};
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::string out = kSigns[phase_];
    out.reserve(out.size() + n_);
    for (size_t q = 0; q < n_; ++q) {
        out.push_back(kLetters[letter(q)]);
    }
    return out;
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("pauli_mul: qubit count mismatch");
    }
    PauliString out(a.n_);
    // Literal products: XY=iZ, YZ=iX, ZX=iY and the reversed orders give -i.
    int plus = 0;
    int minus = 0;
    for (size_t k = 0; k < a.x_.size(); ++k) {
        uint64_t x1 = a.x_[k], z1 = a.z_[k], x2 = b.x_[k], z2 = b.z_[k];
        uint64_t is_x1 = x1 & ~z1, is_y1 = x1 & z1, is_z1 = ~x1 & z1;
        uint64_t is_x2 = x2 & ~z2, is_y2 = x2 & z2, is_z2 = ~x2 & z2;
        plus += std::popcount((is_x1 & is_y2) | (is_y1 & is_z2) | (is_z1 & is_x2));
        minus += std::popcount((is_y1 & is_x2) | (is_z1 & is_y2) | (is_x1 & is_z2));
        out.x_[k] = x1 ^ x2;
        out.z_[k] = z1 ^ z2;
    }
    out.phase_ = static_cast<uint8_t>((a.phase_ + b.phase_ + plus + 3 * minus) & 3);
    return out;
}

void check_edges(std::span<const Edge> edges, size_t n) {
    std::vector<bool> seen(n, false);
    for (const auto &[u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("CZ edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for " + std::to_string(n) + " qubits");
        }
        if (u == v) {
            throw std::invalid_argument("CZ edge joins qubit " + std::to_string(u) + " to itself");
        }
        for (uint32_t q : {u, v}) {
            if (seen[q]) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " repeated in CZ edge list");
            }
            seen[q] = true;
        }
    }
}

PauliString conjugate_through_cz(const PauliString &p, std::span<const Edge> edges) {
    size_t n = p.num_qubits();
    check_edges(edges, n);
    PauliString result = p;
    for (const auto &[u, v] : edges) {
        result.set(u, false, false);
        result.set(v, false, false);
    }
    // CZ maps X_u -> X_u Z_v and Y_u -> Y_u Z_v (no phase), fixing Z. The images
    // of the two endpoint factors commute, so multiplying them in either order
    // reproduces the conjugated operator exactly.
    for (const auto &[u, v] : edges) {
        PauliString image_u(n);
        image_u.set_letter(u, p.letter(u));
        if (p.x(u)) {
            image_u.set(v, false, true);
        }
        PauliString image_v(n);
        image_v.set_letter(v, p.letter(v));
        if (p.x(v)) {
            image_v.set(u, false, true);
        }
        result = pauli_mul(result, pauli_mul(image_u, image_v));
    }
    return result;
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("commutes: qubit count mismatch");
    }
    int parity = 0;
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    for (size_t k = 0; k < ax.size(); ++k) {
        parity ^= std::popcount((ax[k] & bz[k]) ^ (az[k] & bx[k])) & 1;
    }
    return parity == 0;
}

}  // namespace accredo
