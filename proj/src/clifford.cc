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

#include "accredo/clifford.h"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace accredo {

namespace {

struct CliffordTable {
    std::array<SignedPauli, 24> x_image{};
    std::array<SignedPauli, 24> z_image{};
    std::array<Mat2, 24> unitary{};
    std::array<std::array<uint8_t, 24>, 24> product{};
    std::array<uint8_t, 24> inverse{};
};

int action_key(SignedPauli x, SignedPauli z) { return (x.letter * 2 + x.negative) * 8 + z.letter * 2 + z.negative; }

SignedPauli apply_action(SignedPauli x_img, SignedPauli z_img, SignedPauli p) {
    switch (p.letter) {
        case 0:
            return p;
        case 1:
            return {x_img.letter, x_img.negative != p.negative};
        case 3:
            return {z_img.letter, z_img.negative != p.negative};
        default: {
            // Y = i X Z, so U Y U^dag = i (U X U^dag)(U Z U^dag).
            int log_i = 0;
            int letter = single_pauli_product(x_img.letter, z_img.letter, log_i);
            log_i += 1;
            if (x_img.negative != z_img.negative) {
                log_i += 2;
            }
            if (p.negative) {
                log_i += 2;
            }
            return {static_cast<uint8_t>(letter), (log_i & 3) == 2};
        }
    }
}

SignedPauli conjugate_by_matrix(const Mat2 &u, int letter) {
    Mat2 image = mat2_mul(mat2_mul(u, pauli_matrix(letter)), mat2_adjoint(u));
    for (int candidate = 1; candidate < 4; ++candidate) {
        Mat2 p = pauli_matrix(candidate);
        for (int sign = 0; sign < 2; ++sign) {
            double s = sign ? -1.0 : 1.0;
            double err = 0;
            for (int k = 0; k < 4; ++k) {
                err = std::max(err, std::abs(image[k] - s * p[k]));
            }
            if (err < 1e-9) {
                return {static_cast<uint8_t>(candidate), sign == 1};
            }
        }
    }
    throw std::logic_error("matrix is not a Clifford");
}

CliffordTable build_table() {
    CliffordTable t;
    const double r = 1.0 / std::sqrt(2.0);
    const std::array<Mat2, 2> generators{
        Mat2{Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}},
        Mat2{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 1}},
    };
    std::array<int, 48 * 8> lookup{};
    lookup.fill(-1);
    std::vector<Mat2> found{kIdentity2};
    lookup[action_key({1, false}, {3, false})] = 0;
    t.x_image[0] = {1, false};
    t.z_image[0] = {3, false};
    for (size_t head = 0; head < found.size(); ++head) {
        for (const Mat2 &g : generators) {
            Mat2 u = mat2_mul(g, found[head]);
            SignedPauli xi = conjugate_by_matrix(u, 1);
            SignedPauli zi = conjugate_by_matrix(u, 3);
            int key = action_key(xi, zi);
            if (lookup[key] < 0) {
                lookup[key] = static_cast<int>(found.size());
                t.x_image[found.size()] = xi;
                t.z_image[found.size()] = zi;
                found.push_back(u);
            }
        }
    }
    if (found.size() != 24) {
        throw std::logic_error("Clifford enumeration did not close at 24 elements");
    }
    for (int i = 0; i < 24; ++i) {
        t.unitary[i] = found[i];
    }
    for (int a = 0; a < 24; ++a) {
        for (int b = 0; b < 24; ++b) {
            SignedPauli xi = apply_action(t.x_image[a], t.z_image[a], t.x_image[b]);
            SignedPauli zi = apply_action(t.x_image[a], t.z_image[a], t.z_image[b]);
            t.product[a][b] = static_cast<uint8_t>(lookup[action_key(xi, zi)]);
        }
    }
    for (int a = 0; a < 24; ++a) {
        for (int b = 0; b < 24; ++b) {
            if (t.product[a][b] == 0) {
                t.inverse[a] = static_cast<uint8_t>(b);
            }
        }
    }
    return t;
}

const CliffordTable &table() {
    static const CliffordTable t = build_table();
    return t;
}

}  // namespace

std::string SignedPauli::str() const {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    return std::string(negative ? "-" : "+") + kLetters[letter & 3];
}

int single_pauli_product(int a, int b, int &log_i) {
    log_i = 0;
    if (a == 0) {
        return b;
    }
    if (b == 0 || a == b) {
        return a == b ? 0 : a;
    }
    // Cyclic order X(1) -> Y(2) -> Z(3) -> X gives +i.
    int next = a % 3 + 1;
    log_i = (b == next) ? 1 : 3;
    return 6 - a - b;
}

SingleQubitClifford::SingleQubitClifford(int index) : index_(static_cast<uint8_t>(index)) {
    if (index < 0 || index >= kCount) {
        throw std::out_of_range("Clifford index " + std::to_string(index) + " outside [0,24)");
    }
}

SingleQubitClifford SingleQubitClifford::hadamard() { return from_action({3, false}, {1, false}); }

SingleQubitClifford SingleQubitClifford::phase_s() { return from_action({2, false}, {3, false}); }

SingleQubitClifford SingleQubitClifford::pauli(int letter) {
    switch (letter) {
        case 0:
            return identity();
        case 1:
            return from_action({1, false}, {3, true});
        case 2:
            return from_action({1, true}, {3, true});
        case 3:
            return from_action({1, true}, {3, false});
        default:
            throw std::out_of_range("Pauli letter outside 0..3");
    }
}

SingleQubitClifford SingleQubitClifford::from_action(SignedPauli x_image, SignedPauli z_image) {
    const auto &t = table();
    for (int i = 0; i < kCount; ++i) {
        if (t.x_image[i] == x_image && t.z_image[i] == z_image) {
            return SingleQubitClifford(i);
        }
    }
    throw std::invalid_argument("No Clifford maps X->" + x_image.str() + ", Z->" + z_image.str());
}

SignedPauli SingleQubitClifford::x_image() const { return table().x_image[index_]; }

SignedPauli SingleQubitClifford::z_image() const { return table().z_image[index_]; }

const Mat2 &SingleQubitClifford::unitary() const { return table().unitary[index_]; }

SignedPauli SingleQubitClifford::conjugate(SignedPauli p) const {
    const auto &t = table();
    return apply_action(t.x_image[index_], t.z_image[index_], p);
}

SingleQubitClifford SingleQubitClifford::inverse() const { return SingleQubitClifford(table().inverse[index_]); }

SingleQubitClifford compose(SingleQubitClifford a, SingleQubitClifford b) {
    return SingleQubitClifford(table().product[a.index()][b.index()]);
}

}  // namespace accredo
