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

#include <cstdlib>
#include <string_view>

#include "accredo/kernels.h"

namespace accredo::kernels {

namespace {

struct Pair {
    double re;
    double im;
};

inline Pair cmul(Complex m, Complex a) {
    return {m.real() * a.real() - m.imag() * a.imag(), m.real() * a.imag() + m.imag() * a.real()};
}

void apply_1q_scalar(std::span<Complex> amps, size_t q, const Mat2 &m) {
    const size_t stride = size_t{1} << q;
    for (size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            Pair p00 = cmul(m[0], a0), p01 = cmul(m[1], a1);
            Pair p10 = cmul(m[2], a0), p11 = cmul(m[3], a1);
            amps[i] = Complex{p00.re + p01.re, p00.im + p01.im};
            amps[i + stride] = Complex{p10.re + p11.re, p10.im + p11.im};
        }
    }
}

void apply_cz_scalar(std::span<Complex> amps, size_t a, size_t b) {
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

void abs2_scalar(std::span<const Complex> amps, std::span<double> out) {
    for (size_t i = 0; i < amps.size(); ++i) {
        out[i] = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
}

}  // namespace

const KernelTable &scalar() {
    static const KernelTable table{"scalar", apply_1q_scalar, apply_cz_scalar, abs2_scalar};
    return table;
}

const KernelTable &active() {
    static const KernelTable *chosen = [] {
        const char *forced = std::getenv("ACCREDO_KERNELS");
        if (forced != nullptr && std::string_view(forced) == "scalar") {
            return &scalar();
        }
        const KernelTable *simd = avx2();
        return simd != nullptr ? simd : &scalar();
    }();
    return *chosen;
}

}  // namespace accredo::kernels
