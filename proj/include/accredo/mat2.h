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
#include <complex>

namespace accredo {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

inline Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

inline Mat2 mat2_adjoint(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

inline constexpr Mat2 kIdentity2{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};

/// Pauli matrix for letter code 0=I, 1=X, 2=Y, 3=Z.
inline Mat2 pauli_matrix(int letter) {
    switch (letter) {
        case 1:
            return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
        case 2:
            return {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}};
        case 3:
            return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
        default:
            return kIdentity2;
    }
}

/// exp(-i angle/2 P) for axis P in {'X','Y','Z'}.
Mat2 rotation_matrix(char axis, double angle);

/// Largest entrywise distance between a and b after removing the global phase
/// that best aligns them. Used to compare unitaries modulo phase.
double mat2_distance_up_to_phase(const Mat2 &a, const Mat2 &b);

}  // namespace accredo
