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

#include <set>

#include "gtest/gtest.h"

#include "dense.h"

using namespace accredo;
using accredo::oracle::diff_up_to_phase;
using accredo::oracle::from_mat2;
using accredo::oracle::max_abs_diff;

namespace {

std::string action(int index) {
    SingleQubitClifford c(index);
    return c.x_image().str() + c.z_image().str();
}

SignedPauli sp(int letter, bool negative = false) { return SignedPauli{static_cast<uint8_t>(letter), negative}; }

}  // namespace

TEST(clifford, table_order_is_frozen) {
    const char *expected[24] = {"+X+Z", "+Z+X", "+Y+Z", "+Z+Y", "-Y+X", "-X+Z", "+X-Y", "+Z-X",
                                "+X+Y", "-Z+X", "-Y+Z", "+Y+X", "+X-Z", "+Z-Y", "+Y-X", "-Z+Y",
                                "-X+Y", "+Y-Z", "-Y-Z", "-X-Y", "-Z-X", "-Z-Y", "-Y-X", "-X-Z"};
    for (int i = 0; i < 24; ++i) {
        ASSERT_EQ(action(i), expected[i]) << "index " << i;
    }
}

TEST(clifford, named_elements) {
    ASSERT_EQ(SingleQubitClifford::identity().index(), 0);
    ASSERT_EQ(SingleQubitClifford::hadamard().index(), 1);
    ASSERT_EQ(SingleQubitClifford::phase_s().index(), 2);
    ASSERT_EQ(action(SingleQubitClifford::pauli(1).index()), "+X-Z");
    ASSERT_EQ(action(SingleQubitClifford::pauli(2).index()), "-X-Z");
    ASSERT_EQ(action(SingleQubitClifford::pauli(3).index()), "-X+Z");
    ASSERT_EQ(SingleQubitClifford::pauli(0), SingleQubitClifford::identity());
}

TEST(clifford, actions_are_distinct_and_valid) {
    std::set<std::string> seen;
    for (int i = 0; i < 24; ++i) {
        SingleQubitClifford c(i);
        ASSERT_NE(c.x_image().letter, c.z_image().letter);
        seen.insert(action(i));
        ASSERT_EQ(SingleQubitClifford::from_action(c.x_image(), c.z_image()), c);
    }
    ASSERT_EQ(seen.size(), 24u);
    ASSERT_THROW(SingleQubitClifford::from_action(sp(1), sp(1, true)), std::invalid_argument);
    ASSERT_THROW(SingleQubitClifford(24), std::out_of_range);
}

TEST(clifford, conjugation_matches_dense_oracle) {
    for (int i = 0; i < 24; ++i) {
        SingleQubitClifford c(i);
        auto u = from_mat2(c.unitary());
        ASSERT_LT(max_abs_diff(u * u.adjoint(), oracle::DenseMatrix::identity(2)), 1e-12);
        for (int letter = 1; letter <= 3; ++letter) {
            for (bool negative : {false, true}) {
                SignedPauli p = sp(letter, negative);
                SignedPauli out = conjugate_through_clifford(c, p);
                auto lhs = u * from_mat2(pauli_matrix(letter)) * u.adjoint();
                auto rhs = from_mat2(pauli_matrix(out.letter));
                double sign = (negative != out.negative) ? -1 : 1;
                for (auto &v : rhs.a) {
                    v *= sign;
                }
                ASSERT_LT(max_abs_diff(lhs, rhs), 1e-12) << "clifford " << i << " on " << p.str();
            }
        }
    }
}

TEST(clifford, compose_and_inverse_match_unitaries) {
    for (int i = 0; i < 24; ++i) {
        SingleQubitClifford a(i);
        ASSERT_EQ(compose(a, a.inverse()), SingleQubitClifford::identity());
        ASSERT_EQ(compose(a.inverse(), a), SingleQubitClifford::identity());
        for (int j = 0; j < 24; ++j) {
            SingleQubitClifford b(j);
            auto product = from_mat2(a.unitary()) * from_mat2(b.unitary());
            ASSERT_LT(diff_up_to_phase(from_mat2(compose(a, b).unitary()), product), 1e-12) << i << "*" << j;
        }
    }
}

TEST(clifford, single_pauli_product_phases) {
    int log_i = 0;
    ASSERT_EQ(single_pauli_product(1, 2, log_i), 3);
    ASSERT_EQ(log_i, 1);
    ASSERT_EQ(single_pauli_product(2, 1, log_i), 3);
    ASSERT_EQ(log_i, 3);
    ASSERT_EQ(single_pauli_product(3, 1, log_i), 2);
    ASSERT_EQ(log_i, 1);
    ASSERT_EQ(single_pauli_product(2, 2, log_i), 0);
    ASSERT_EQ(log_i, 0);
}
