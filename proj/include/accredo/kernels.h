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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

#include "accredo/mat2.h"

namespace accredo::kernels {

/// Dense statevector inner loops. Amplitude index bit q is qubit q.
///
/// Every variant performs the same floating-point operations in the same order
/// as the scalar reference (no fused multiply-add), so all variants produce
/// bit-identical results and seeded sampling does not depend on the machine.
struct KernelTable {
    std::string_view name;
    /// amps <- (m acting on qubit q) amps. amps.size() must be a power of two >= 2.
    void (*apply_1q)(std::span<Complex> amps, size_t q, const Mat2 &m);
    /// Negates amplitudes whose bits a and b are both set.
    void (*apply_cz)(std::span<Complex> amps, size_t a, size_t b);
    /// out[i] = |amps[i]|^2.
    void (*abs2)(std::span<const Complex> amps, std::span<double> out);
};

const KernelTable &scalar();

/// AVX2 variant, or nullptr when it was not compiled in or the CPU lacks AVX2.
const KernelTable *avx2();

/// Kernels used by the simulator: the best supported variant, unless the
/// environment variable ACCREDO_KERNELS=scalar forces the reference.
const KernelTable &active();

}  // namespace accredo::kernels
