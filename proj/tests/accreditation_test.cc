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

#include "accredo/accreditation.h"

#include "gtest/gtest.h"

#include "accredo/compiling.h"
#include "dense.h"
#include "fixtures.h"

using namespace accredo;

TEST(accreditation, min_traps) {
    ASSERT_EQ(min_traps(0.95, 0.25), 119u);
    ASSERT_EQ(min_traps(0.95, 1.0), 8u);
    ASSERT_GT(min_traps(0.99, 0.25), min_traps(0.95, 0.25));
    ASSERT_THROW(min_traps(1.0, 0.25), std::invalid_argument);
    ASSERT_THROW(min_traps(0.95, 0.0), std::invalid_argument);
    ASSERT_LE(theta_for_traps(119, 0.95), 0.25);
    ASSERT_GT(theta_for_traps(118, 0.95), 0.25);
}

TEST(accreditation, tvd_bounds) {
    ASSERT_DOUBLE_EQ(tvd_bound(0, 119, 0.25), 0.25);
    ASSERT_DOUBLE_EQ(tvd_bound(10, 100, 0.2), 2 * (0.1 + 0.1));
    ASSERT_DOUBLE_EQ(tvd_bound(100, 100, 0.2), 1.0);
    ASSERT_DOUBLE_EQ(tvd_point_bound(10, 100), 0.2);
    ASSERT_DOUBLE_EQ(tvd_point_bound(80, 100), 1.0);
    ASSERT_THROW(tvd_bound(5, 4, 0.2), std::invalid_argument);
    ASSERT_THROW(tvd_bound(0, 0, 0.2), std::invalid_argument);
}

TEST(accreditation, acceptance_modes) {
    auto tvd = AcceptanceMode::tvd(0.5, 0.25);
    ASSERT_TRUE(tvd.accepts(0, 119));
    ASSERT_TRUE(tvd.accepts(14, 119));
    ASSERT_FALSE(tvd.accepts(15, 119));
    ASSERT_FALSE(tvd.accepts(30, 119));
    auto cutoff = AcceptanceMode::trap_cutoff(6, 1.0);
    ASSERT_TRUE(cutoff.accepts(8, 15));   // 7 passed > 6
    ASSERT_FALSE(cutoff.accepts(9, 15));  // 6 passed
    ASSERT_EQ(cutoff.name(), "trap_cutoff");
    ASSERT_EQ(tvd.name(), "tvd_bound");
}

TEST(accreditation, traps_return_all_zeros_noiselessly) {
    Rng rng(51);
    for (size_t target = 0; target < 20; ++target) {
        size_t n = 1 + target % 6;
        auto c = oracle::random_circuit(n, 1 + 2 * (target % 7), rng);
        for (int k = 0; k < 10; ++k) {
            TrapCircuit trap = generate_trap(c, rng);
            ASSERT_EQ(trap.circuit.layers.size(), c.layers.size());
            for (size_t l = 0; l < c.layers.size(); ++l) {
                if (c.layers[l].kind == LayerKind::TypeI) {
                    ASSERT_EQ(trap.circuit.layers[l], c.layers[l]);
                } else {
                    for (const Gate &g : trap.circuit.layers[l].gates) {
                        ASSERT_TRUE(g.is_clifford());
                    }
                }
            }
            auto probs = oracle::dense_distribution(trap.circuit);
            ASSERT_NEAR(probs[0], 1, 1e-10);
            auto compiled = randomized_compile(trap.circuit, rng);
            auto compiled_probs = oracle::dense_distribution(compiled.circuit);
            for (size_t i = 0; i < compiled_probs.size(); ++i) {
                if (compiled_probs[i] > 1e-10) {
                    ASSERT_EQ(undo_pad_index(compiled.frame, i), 0u);
                }
            }
        }
    }
}

TEST(accreditation, trap_basis_plan_covers_every_edge) {
    Rng rng(52);
    auto c = ansatz_fig1(6, 13);
    for (int k = 0; k < 50; ++k) {
        TrapCircuit trap = generate_trap(c, rng);
        ASSERT_EQ(trap.basis_plan.size(), c.type_one_count());
        ASSERT_EQ(trap.byproducts.size(), c.type_one_count());
        size_t t = 0;
        for (const Layer &layer : c.layers) {
            if (layer.kind != LayerKind::TypeI) {
                continue;
            }
            for (const auto &[u, v] : layer.edges) {
                ASSERT_FALSE(trap.basis_plan[t][u] == TrapBasis::X && trap.basis_plan[t][v] == TrapBasis::X);
            }
            ++t;
        }
    }
}

TEST(accreditation, zero_noise_run) {
    Rng rng(53);
    auto c = ansatz_fig1(3, 5);
    auto b = uniform_behaviour(1, c, FaultSpec::none());
    auto mode = AcceptanceMode::tvd(0.3, 0.25);
    for (int k = 0; k < 20; ++k) {
        RunRecord r = run_accreditation(c, PauliObservable("ZZI"), 30, b, mode, rng);
        ASSERT_EQ(r.n_inc, 0u);
        ASSERT_DOUBLE_EQ(r.tvd_bound, 0.25);
        ASSERT_TRUE(r.accepted);
        ASSERT_LE(r.nu, 30u);
        ASSERT_EQ(bits_to_string(r.target_bits), "111");
        ASSERT_EQ(r.lambda, 1);
    }
}

TEST(accreditation, position_of_target_is_uniform) {
    Rng rng(54);
    auto c = ansatz_fig1(2, 3);
    auto b = uniform_behaviour(1, c, FaultSpec::none());
    std::vector<size_t> counts(4, 0);
    for (int k = 0; k < 4000; ++k) {
        ++counts[run_accreditation(c, PauliObservable("ZI"), 3, b, AcceptanceMode::tvd(1, 1), rng).nu];
    }
    for (size_t x : counts) {
        ASSERT_NEAR(x / 4000.0, 0.25, 0.03);
    }
}

TEST(accreditation, trap_failures_bound_p_err) {
    Rng rng(55);
    auto c = ansatz_fig1(4, 9);
    auto b = global_depolarizing_behaviour(1, c, 0.2);
    auto mode = AcceptanceMode::tvd(1, 0.25);
    PreparedTarget target(c, PauliObservable("ZIII"));
    const size_t runs = 500;
    const size_t traps = 119;
    double total = 0;
    double total_sq = 0;
    for (size_t k = 0; k < runs; ++k) {
        double f = static_cast<double>(run_accreditation(target, traps, b, mode, rng).n_inc) / traps;
        total += f;
        total_sq += f * f;
    }
    double mean = total / runs;
    double se = std::sqrt((total_sq / runs - mean * mean) / runs);
    ASSERT_GE(2 * mean + 3 * se, 0.2);
}

TEST(accreditation, run_rejects_bad_input) {
    Rng rng(56);
    auto c = ansatz_fig1(2, 3);
    auto b = uniform_behaviour(1, c, FaultSpec::none());
    ASSERT_THROW(run_accreditation(c, PauliObservable("ZI"), 0, b, AcceptanceMode::tvd(1, 1), rng),
                 std::invalid_argument);
    auto wrong = uniform_behaviour(1, ansatz_fig1(2, 5), FaultSpec::none());
    ASSERT_THROW(run_accreditation(c, PauliObservable("ZI"), 4, wrong, AcceptanceMode::tvd(1, 1), rng),
                 std::invalid_argument);
}
