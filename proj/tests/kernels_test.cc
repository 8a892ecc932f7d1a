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

#include <cstring>

#include "gtest/gtest.h"

#include "fixtures.h"

using namespace accredo;

namespace {

std::vector<Complex> random_state(size_t n, Rng &rng) {
    std::vector<Complex> v(size_t{1} << n);
    for (auto &z : v) {
        z = Complex{rng.uniform01() - 0.5, rng.uniform01() - 0.5};
    }
    return v;
}

bool bit_identical(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

}  // namespace

TEST(kernels, scalar_apply_1q_matches_definition) {
    Rng rng(1);
    for (size_t n = 1; n <= 4; ++n) {
        for (size_t q = 0; q < n; ++q) {
            auto v = random_state(n, rng);
            Mat2 m = oracle::random_unitary(rng);
            auto expected = v;
            for (size_t i = 0; i < v.size(); ++i) {
                if ((i >> q) & 1) {
                    continue;
                }
                size_t j = i | (size_t{1} << q);
                expected[i] = m[0] * v[i] + m[1] * v[j];
                expected[j] = m[2] * v[i] + m[3] * v[j];
            }
            kernels::scalar().apply_1q(v, q, m);
            for (size_t i = 0; i < v.size(); ++i) {
                ASSERT_NEAR(std::abs(v[i] - expected[i]), 0, 1e-14);
            }
        }
    }
}

TEST(kernels, scalar_cz_and_abs2) {
    Rng rng(2);
    auto v = random_state(3, rng);
    auto expected = v;
    for (size_t i = 0; i < v.size(); ++i) {
        if ((i & 0b101) == 0b101) {
            expected[i] = -expected[i];
        }
    }
    kernels::scalar().apply_cz(v, 0, 2);
    ASSERT_TRUE(bit_identical(v, expected));
    std::vector<double> out(v.size());
    kernels::scalar().abs2(v, out);
    for (size_t i = 0; i < v.size(); ++i) {
        ASSERT_EQ(out[i], v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
    }
}

TEST(kernels, active_respects_override) {
    ASSERT_FALSE(kernels::active().name.empty());
    if (kernels::avx2() == nullptr) {
        ASSERT_EQ(kernels::active().name, kernels::scalar().name);
    }
}

TEST(kernels, avx2_is_bit_identical_to_scalar) {
    const kernels::KernelTable *simd = kernels::avx2();
    if (simd == nullptr) {
        GTEST_SKIP() << "AVX2 not available on this machine";
    }
    Rng rng(3);
    for (size_t n = 1; n <= 10; ++n) {
        for (size_t trial = 0; trial < 20; ++trial) {
            auto a = random_state(n, rng);
            auto b = a;
            size_t q = rng.uniform_below(n);
            Mat2 m = oracle::random_unitary(rng);
            kernels::scalar().apply_1q(a, q, m);
            simd->apply_1q(b, q, m);
            ASSERT_TRUE(bit_identical(a, b)) << "apply_1q n=" << n << " q=" << q;

            if (n >= 2) {
                size_t u = rng.uniform_below(n);
                size_t w = (u + 1 + rng.uniform_below(n - 1)) % n;
                kernels::scalar().apply_cz(a, u, w);
                simd->apply_cz(b, u, w);
                ASSERT_TRUE(bit_identical(a, b)) << "apply_cz n=" << n;
            }

            std::vector<double> pa(a.size()), pb(b.size());
            kernels::scalar().abs2(a, pa);
            simd->abs2(b, pb);
            ASSERT_EQ(std::memcmp(pa.data(), pb.data(), pa.size() * sizeof(double)), 0) << "abs2 n=" << n;
        }
    }
}
