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

#include "accredo/kernels.h"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace accredo::kernels {

#if defined(__AVX2__)

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].

inline __m256d load2(const Complex *p) { return _mm256_loadu_pd(reinterpret_cast<const double *>(p)); }

inline void store2(Complex *p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double *>(p), v); }

// Lane-wise complex product m*a given m split into broadcast real and
// imaginary parts. Matches the scalar order: re = mr*ar - mi*ai,
// im = mr*ai + mi*ar.
inline __m256d cmul(__m256d m_re, __m256d m_im, __m256d a) {
    __m256d swapped = _mm256_permute_pd(a, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(m_re, a), _mm256_mul_pd(m_im, swapped));
}

void apply_1q_avx2(std::span<Complex> amps, size_t q, const Mat2 &m) {
    Complex *data = amps.data();
    const size_t len = amps.size();
    if (q == 0) {
        const __m256d a_re = _mm256_setr_pd(m[0].real(), m[0].real(), m[2].real(), m[2].real());
        const __m256d a_im = _mm256_setr_pd(m[0].imag(), m[0].imag(), m[2].imag(), m[2].imag());
        const __m256d b_re = _mm256_setr_pd(m[1].real(), m[1].real(), m[3].real(), m[3].real());
        const __m256d b_im = _mm256_setr_pd(m[1].imag(), m[1].imag(), m[3].imag(), m[3].imag());
        for (size_t i = 0; i < len; i += 2) {
            __m256d v = load2(data + i);
            __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);
            __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);
            store2(data + i, _mm256_add_pd(cmul(a_re, a_im, lo), cmul(b_re, b_im, hi)));
        }
        return;
    }
    const __m256d m00_re = _mm256_set1_pd(m[0].real()), m00_im = _mm256_set1_pd(m[0].imag());
    const __m256d m01_re = _mm256_set1_pd(m[1].real()), m01_im = _mm256_set1_pd(m[1].imag());
    const __m256d m10_re = _mm256_set1_pd(m[2].real()), m10_im = _mm256_set1_pd(m[2].imag());
    const __m256d m11_re = _mm256_set1_pd(m[3].real()), m11_im = _mm256_set1_pd(m[3].imag());
    const size_t stride = size_t{1} << q;
    for (size_t base = 0; base < len; base += 2 * stride) {
        for (size_t i = base; i < base + stride; i += 2) {
            __m256d a0 = load2(data + i);
            __m256d a1 = load2(data + i + stride);
            store2(data + i, _mm256_add_pd(cmul(m00_re, m00_im, a0), cmul(m01_re, m01_im, a1)));
            store2(data + i + stride, _mm256_add_pd(cmul(m10_re, m10_im, a0), cmul(m11_re, m11_im, a1)));
        }
    }
}

void apply_cz_avx2(std::span<Complex> amps, size_t a, size_t b) {
    Complex *data = amps.data();
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    const __m256d sign_lo = _mm256_setr_pd(-0.0, -0.0, 0.0, 0.0);
    const __m256d sign_hi = _mm256_setr_pd(0.0, 0.0, -0.0, -0.0);
    for (size_t i = 0; i < amps.size(); i += 2) {
        bool flip_lo = (i & mask) == mask;
        bool flip_hi = ((i + 1) & mask) == mask;
        if (!flip_lo && !flip_hi) {
            continue;
        }
        __m256d flips = _mm256_or_pd(flip_lo ? sign_lo : _mm256_setzero_pd(), flip_hi ? sign_hi : _mm256_setzero_pd());
        store2(data + i, _mm256_xor_pd(load2(data + i), flips));
    }
}

void abs2_avx2(std::span<const Complex> amps, std::span<double> out) {
    const Complex *data = amps.data();
    const size_t len = amps.size();
    size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d v0 = load2(data + i);
        __m256d v1 = load2(data + i + 2);
        __m256d sums = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        // hadd yields [e0, e2, e1, e3].
        _mm256_storeu_pd(out.data() + i, _mm256_permute4x64_pd(sums, 0b11011000));
    }
    for (; i < len; ++i) {
        out[i] = data[i].real() * data[i].real() + data[i].imag() * data[i].imag();
    }
}

}  // namespace

const KernelTable *avx2() {
    static const KernelTable table{"avx2", apply_1q_avx2, apply_cz_avx2, abs2_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
}

#else

const KernelTable *avx2() { return nullptr; }

#endif

}  // namespace accredo::kernels
