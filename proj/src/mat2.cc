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

#include "accredo/mat2.h"

#include <cmath>
#include <stdexcept>

namespace accredo {

Mat2 rotation_matrix(char axis, double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    switch (axis) {
        case 'X':
            return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
        case 'Y':
            return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
        case 'Z':
            return {Complex{c, -s}, Complex{0, 0}, Complex{0, 0}, Complex{c, s}};
        default:
            throw std::invalid_argument(std::string("Unknown rotation axis '") + axis + "'");
    }
}

double mat2_distance_up_to_phase(const Mat2 &a, const Mat2 &b) {
    // Align on the largest entry of a.
    size_t k = 0;
    for (size_t i = 1; i < 4; ++i) {
        if (std::abs(a[i]) > std::abs(a[k])) {
            k = i;
        }
    }
    if (std::abs(b[k]) < 1e-300) {
        return std::abs(a[k]);
    }
    Complex phase = (a[k] / b[k]) / std::abs(a[k] / b[k]);
    double worst = 0;
    for (size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

}  // namespace accredo
