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

#include "accredo/circuit.h"

#include <numbers>

#include "gtest/gtest.h"

#include "dense.h"
#include "fixtures.h"

using namespace accredo;

TEST(circuit, ansatz_structure) {
    auto c = ansatz_fig1(4, 9);
    ASSERT_TRUE(validate_circuit(c).empty());
    ASSERT_EQ(c.layers.size(), 9u);
    ASSERT_EQ(c.band_count(), 5u);
    ASSERT_EQ(c.type_one_count(), 4u);
    ASSERT_EQ(c.layers[1].edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
    ASSERT_EQ(c.layers[3].edges, (std::vector<Edge>{{1, 2}}));
    ASSERT_EQ(c.layers[0].gates[2], Gate(Rotation{'X', std::numbers::pi}));
    ASSERT_THROW(ansatz_fig1(4, 8), std::invalid_argument);
}

TEST(circuit, validation_messages) {
    LayeredCircuit c;
    c.num_qubits = 2;
    ASSERT_FALSE(validate_circuit(c).empty());

    c.layers = {Layer::cz({{0, 1}})};
    auto problems = validate_circuit(c);
    ASSERT_FALSE(problems.empty());
    ASSERT_EQ(problems.front(), "first layer must be TypeII");

    c.layers = {Layer::single({Gate(), Gate()}), Layer::single({Gate(), Gate()}), Layer::single({Gate(), Gate()})};
    ASSERT_FALSE(validate_circuit(c).empty());

    c.layers = {Layer::single({Gate()})};
    ASSERT_FALSE(validate_circuit(c).empty());

    c.layers = {Layer::single({Gate(), Gate()}), Layer::cz({{0, 0}}), Layer::single({Gate(), Gate()})};
    ASSERT_FALSE(validate_circuit(c).empty());
    ASSERT_THROW(require_valid(c), std::invalid_argument);

    c.layers = {Layer::single({Gate(), Gate()})};
    ASSERT_TRUE(validate_circuit(c).empty());
}

TEST(circuit, observable_parsing) {
    PauliObservable o("ZIXY");
    ASSERT_EQ(o.num_qubits(), 4u);
    ASSERT_EQ(PauliObservable("Z1_").str(), "ZII");
    ASSERT_THROW(PauliObservable("III"), std::invalid_argument);
    ASSERT_THROW(PauliObservable("ZQ"), std::invalid_argument);
    ASSERT_THROW(PauliObservable(""), std::invalid_argument);
}

TEST(circuit, bitstrings) {
    auto bits = bits_from_index(0b1101, 4);
    ASSERT_EQ(bits_to_string(bits), "1011");
    ASSERT_EQ(index_from_bits(bits), 0b1101u);
    ASSERT_EQ(bits_from_string("1011"), bits);
    ASSERT_THROW(bits_from_string("10a"), std::invalid_argument);
}

TEST(circuit, eigenvalues) {
    PauliObservable o("ZIZ");
    ASSERT_EQ(eigenvalue_from_bitstring(o, bits_from_string("000")), 1);
    ASSERT_EQ(eigenvalue_from_bitstring(o, bits_from_string("100")), -1);
    ASSERT_EQ(eigenvalue_from_bitstring(o, bits_from_string("010")), 1);
    ASSERT_EQ(eigenvalue_from_bitstring(o, bits_from_string("101")), 1);
    ASSERT_EQ(eigenvalue_from_index(o, 0b001), -1);
    ASSERT_THROW(eigenvalue_from_bitstring(o, bits_from_string("10")), std::invalid_argument);
}

TEST(circuit, measurement_basis_change) {
    auto layer = measurement_basis_layer(PauliObservable("IXYZ"));
    ASSERT_EQ(layer[0], SingleQubitClifford::identity());
    ASSERT_EQ(layer[1], SingleQubitClifford::hadamard());
    ASSERT_EQ(layer[3], SingleQubitClifford::identity());
    // The Y change must map Y onto +-Z.
    ASSERT_EQ(layer[2].conjugate(SignedPauli{2, false}).letter, 3);
    ASSERT_EQ(layer[1].conjugate(SignedPauli{1, false}).letter, 3);
}

TEST(circuit, absorbed_basis_reproduces_dense_expectation) {
    Rng rng(11);
    for (size_t trial = 0; trial < 30; ++trial) {
        size_t n = 1 + trial % 4;
        auto c = oracle::random_circuit(n, 5, rng);
        std::string letters;
        for (size_t q = 0; q < n; ++q) {
            letters += "IXYZ"[rng.uniform_below(4)];
        }
        if (letters.find_first_not_of('I') == std::string::npos) {
            letters[0] = 'Y';
        }
        PauliObservable o(letters);
        auto absorbed = absorb_measurement_basis(c, o);
        ASSERT_TRUE(validate_circuit(absorbed).empty());
        auto probs = oracle::dense_distribution(absorbed);
        double from_bits = 0;
        for (size_t i = 0; i < probs.size(); ++i) {
            from_bits += probs[i] * eigenvalue_from_index(o, i);
        }
        // <psi| O |psi> evaluated directly.
        auto u = oracle::circuit_dense(c);
        std::vector<Complex> psi(u.dim);
        for (size_t i = 0; i < u.dim; ++i) {
            psi[i] = u(i, 0);
        }
        auto o_dense = oracle::pauli_dense(PauliString::from_str(letters));
        auto o_psi = o_dense.apply(psi);
        Complex direct{};
        for (size_t i = 0; i < psi.size(); ++i) {
            direct += std::conj(psi[i]) * o_psi[i];
        }
        ASSERT_NEAR(from_bits, direct.real(), 1e-10) << letters;
    }
}
