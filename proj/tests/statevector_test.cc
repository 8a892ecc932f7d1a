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

#include "accredo/statevector.h"

#include "gtest/gtest.h"

#include "dense.h"
#include "fixtures.h"

using namespace accredo;

TEST(statevector, starts_in_all_zeros) {
    StateVector s(3);
    auto amps = s.amplitudes();
    ASSERT_EQ(amps.size(), 8u);
    ASSERT_EQ(amps[0], Complex(1, 0));
    for (size_t i = 1; i < 8; ++i) {
        ASSERT_EQ(amps[i], Complex(0, 0));
    }
    ASSERT_THROW(StateVector(0), std::invalid_argument);
    ASSERT_THROW(StateVector(kMaxDenseQubits + 1), std::invalid_argument);
}

TEST(statevector, simulate_matches_dense_oracle) {
    Rng rng(21);
    for (size_t trial = 0; trial < 40; ++trial) {
        size_t n = 1 + trial % 5;
        auto c = oracle::random_circuit(n, 1 + 2 * (trial % 4), rng);
        auto amps = simulate_ideal(c);
        auto u = oracle::circuit_dense(c);
        for (size_t i = 0; i < amps.size(); ++i) {
            ASSERT_NEAR(std::abs(amps[i] - u(i, 0)), 0, 1e-12);
        }
    }
}

TEST(statevector, scalar_and_active_engines_agree_exactly) {
    Rng rng(22);
    auto c = oracle::random_circuit(8, 9, rng);
    StateVector a(8, kernels::scalar());
    StateVector b(8, kernels::active());
    for (const Layer &layer : c.layers) {
        a.apply_layer(layer);
        b.apply_layer(layer);
    }
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t i = 0; i < x.size(); ++i) {
        ASSERT_EQ(x[i], y[i]);
    }
}

TEST(statevector, apply_pauli_matches_dense_oracle) {
    Rng rng(23);
    auto c = oracle::random_circuit(3, 3, rng);
    for (const char *text : {"XII", "IYZ", "-iZXY", "+iYYY"}) {
        StateVector s(3);
        for (const Layer &layer : c.layers) {
            s.apply_layer(layer);
        }
        std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
        auto p = PauliString::from_str(text);
        s.apply_pauli(p);
        auto expected = oracle::pauli_dense(p).apply(before);
        for (size_t i = 0; i < expected.size(); ++i) {
            ASSERT_NEAR(std::abs(s.amplitudes()[i] - expected[i]), 0, 1e-13) << text;
        }
    }
}

TEST(statevector, sample_index_edges) {
    Rng rng(24);
    std::vector<double> p{0, 0, 1, 0};
    for (int k = 0; k < 100; ++k) {
        ASSERT_EQ(sample_index(p, rng), 2u);
    }
    std::vector<double> q{0.25, 0.75};
    size_t ones = 0;
    for (int k = 0; k < 40000; ++k) {
        ones += sample_index(q, rng);
    }
    ASSERT_NEAR(ones / 40000.0, 0.75, 0.01);
}

TEST(statevector, expectation_from_distribution) {
    std::vector<double> p{0.5, 0.25, 0.125, 0.125};
    ASSERT_DOUBLE_EQ(expectation_from_distribution(p, PauliObservable("ZI")), 0.5 - 0.25 + 0.125 - 0.125);
    ASSERT_DOUBLE_EQ(expectation_from_distribution(p, PauliObservable("ZZ")), 0.5 - 0.25 - 0.125 + 0.125);
}
