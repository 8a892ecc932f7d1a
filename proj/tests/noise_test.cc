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

#include "accredo/noise.h"

#include <functional>

#include "gtest/gtest.h"

#include "dense.h"
#include "fixtures.h"

using namespace accredo;

namespace {

// Brute-force oracle over every fire/no-fire pattern and every Pauli a fired
// location can apply. Each branch goes through the dense unitary and the
// outcome distributions are mixed by branch probability.
struct Branch {
    double weight;
    PauliString pauli;
};

std::vector<Branch> branches(const FaultSpec &f, size_t n) {
    std::vector<Branch> out{{1 - f.p_fault, PauliString(n)}};
    if (f.p_fault == 0) {
        return out;
    }
    if (f.kind == FaultSpec::Kind::Explicit) {
        for (const auto &[p, w] : f.weighted) {
            out.push_back({f.p_fault * w, p});
        }
        return out;
    }
    std::vector<uint32_t> support = f.support;
    if (support.empty()) {
        for (size_t q = 0; q < n; ++q) {
            support.push_back(static_cast<uint32_t>(q));
        }
    }
    size_t count = size_t{1} << (2 * support.size());
    for (size_t code = 0; code < count; ++code) {
        PauliString p(n);
        for (size_t k = 0; k < support.size(); ++k) {
            p.set_letter(support[k], static_cast<int>((code >> (2 * k)) & 3));
        }
        out.push_back({f.p_fault / static_cast<double>(count), p});
    }
    return out;
}

std::vector<double> enumerate_distribution(const LayeredCircuit &c, const NoiseBehaviour &b) {
    const size_t n = c.num_qubits;
    const size_t dim = size_t{1} << n;
    std::vector<const FaultSpec *> sites{&b.prep};
    size_t one = 0, two = 0;
    for (const Layer &layer : c.layers) {
        sites.push_back(layer.kind == LayerKind::TypeI ? &b.type_one[one++] : &b.type_two[two++]);
    }
    std::vector<oracle::DenseMatrix> layers;
    for (const Layer &layer : c.layers) {
        layers.push_back(oracle::layer_dense(n, layer));
    }
    std::vector<double> out(dim, 0);
    std::vector<Complex> psi0(dim);
    psi0[0] = 1;
    std::function<void(size_t, std::vector<Complex>, double)> walk = [&](size_t site, std::vector<Complex> psi,
                                                                         double weight) {
        if (weight == 0) {
            return;
        }
        if (site == sites.size()) {
            for (const Branch &m : branches(b.meas, n)) {
                uint64_t flip = m.pauli.x_mask();
                for (size_t i = 0; i < dim; ++i) {
                    out[i ^ flip] += weight * m.weight * std::norm(psi[i]);
                }
            }
            return;
        }
        for (const Branch &br : branches(*sites[site], n)) {
            auto next = oracle::pauli_dense(br.pauli).apply(psi);
            if (site < layers.size()) {
                next = layers[site].apply(next);
            }
            walk(site + 1, next, weight * br.weight);
        }
    };
    // Site 0 is preparation and site k >= 1 follows layer k-1, so layer k runs
    // right after site k.
    walk(0, psi0, 1.0);
    return out;
}

}  // namespace

TEST(noise, p_err_of) {
    auto c = ansatz_fig1(3, 5);
    ASSERT_EQ(p_err_of(c, uniform_behaviour(1, c, FaultSpec::none())), 0);
    auto b = uniform_behaviour(1, c, FaultSpec::none());
    b.type_one[1] = FaultSpec::depolarizing(0.3);
    ASSERT_NEAR(p_err_of(c, b), 0.3, 1e-15);
    b.meas = FaultSpec::depolarizing(0.5);
    ASSERT_NEAR(p_err_of(c, b), 1 - 0.7 * 0.5, 1e-15);
    ASSERT_NEAR(p_err_of(c, global_depolarizing_behaviour(1, c, 0.2)), 0.2, 1e-12);
}

TEST(noise, validation_names_field) {
    try {
        validate_fault(FaultSpec::depolarizing(1.3), 2, "behaviours[0].prep");
        FAIL() << "expected a validation error";
    } catch (const std::invalid_argument &e) {
        ASSERT_EQ(std::string(e.what()), "behaviours[0].prep.p: probability 1.3 outside [0,1]");
    }
    ASSERT_THROW(validate_fault(FaultSpec::depolarizing(0.1, {0, 0}), 2, "f"), std::invalid_argument);
    ASSERT_THROW(validate_fault(FaultSpec::depolarizing(0.1, {2}), 2, "f"), std::invalid_argument);
    ASSERT_THROW(validate_fault(FaultSpec::explicit_paulis(0.1, {{PauliString::from_str("II"), 1.0}}), 2, "f"),
                 std::invalid_argument);
    ASSERT_THROW(validate_fault(FaultSpec::explicit_paulis(0.1, {{PauliString::from_str("XI"), 0.4}}), 2, "f"),
                 std::invalid_argument);
    ASSERT_THROW(validate_fault(FaultSpec::explicit_paulis(0.1, {{PauliString::from_str("X"), 1.0}}), 2, "f"),
                 std::invalid_argument);
}

TEST(noise, binding_is_checked) {
    auto c = ansatz_fig1(2, 5);
    auto b = uniform_behaviour(1, ansatz_fig1(2, 3), FaultSpec::depolarizing(0.1));
    ASSERT_THROW(check_bound(c, b), std::invalid_argument);
    ASSERT_NO_THROW(check_bound(c, uniform_behaviour(1, c, FaultSpec::depolarizing(0.1))));
}

TEST(noise, density_matrix_matches_enumeration) {
    Rng rng(31);
    for (size_t trial = 0; trial < 8; ++trial) {
        size_t n = 1 + trial % 3;
        auto c = oracle::random_circuit(n, 3, rng);
        NoiseBehaviour b = uniform_behaviour(1, c, FaultSpec::none());
        b.prep = FaultSpec::depolarizing(0.1, {0});
        b.type_two[0] = FaultSpec::explicit_paulis(
            0.2, {{PauliString::from_str(std::string(n, 'Y')), 0.5}, {PauliString::from_str(std::string(n, 'X')), 0.5}});
        b.type_one[0] = FaultSpec::depolarizing(0.15);
        b.type_two[1] = FaultSpec::depolarizing(0.05, {static_cast<uint32_t>(n - 1)});
        b.meas = FaultSpec::depolarizing(0.3);
        auto expected = enumerate_distribution(c, b);
        auto actual = exact_noisy_distribution(c, b);
        ASSERT_EQ(actual.size(), expected.size());
        for (size_t i = 0; i < actual.size(); ++i) {
            ASSERT_NEAR(actual[i], expected[i], 1e-12) << "trial " << trial << " outcome " << i;
        }
    }
}

TEST(noise, noiseless_oracle_reduces_to_ideal) {
    Rng rng(32);
    auto c = oracle::random_circuit(3, 5, rng);
    auto exact = exact_noisy_distribution(c, uniform_behaviour(1, c, FaultSpec::none()));
    auto ideal = oracle::dense_distribution(c);
    ASSERT_LT(oracle::tvd(exact, ideal), 1e-12);
    PauliObservable o("XZY");
    ASSERT_NEAR(exact_noisy_expectation(c, uniform_behaviour(1, c, FaultSpec::none()), o), ideal_expectation(c, o),
                1e-12);
}

TEST(noise, global_depolarizing_closed_form) {
    auto c = ansatz_fig1(4, 9);
    PauliObservable o("ZIII");
    ASSERT_NEAR(ideal_expectation(c, o), -1, 1e-12);
    auto b = global_depolarizing_behaviour(1, c, 0.2);
    ASSERT_NEAR(exact_noisy_expectation(c, b, o), -0.8, 1e-12);
    ASSERT_NEAR(exact_noisy_expectation(c, global_depolarizing_behaviour(2, c, 0.5), PauliObservable("ZZZZ")), 0.5,
                1e-12);
}

TEST(noise, monte_carlo_matches_oracle) {
    Rng rng(33);
    auto c = oracle::random_circuit(3, 5, rng);
    NoiseBehaviour b = uniform_behaviour(1, c, FaultSpec::depolarizing(0.04, {1}));
    b.meas = FaultSpec::explicit_paulis(0.1, {{PauliString::from_str("XIZ"), 1.0}});
    auto exact = exact_noisy_distribution(c, b);
    const size_t shots = 100000;
    auto hist = sample_histogram(c, b, 99, 0, shots);
    double chi2 = 0;
    size_t df = 0;
    for (size_t i = 0; i < exact.size(); ++i) {
        double e = exact[i] * shots;
        if (e < 5) {
            ASSERT_LT(hist[i], 40u);
            continue;
        }
        chi2 += (hist[i] - e) * (hist[i] - e) / e;
        ++df;
    }
    // Far tail of chi-squared with df degrees of freedom.
    ASSERT_LT(chi2, df + 6 * std::sqrt(2.0 * df)) << "df " << df;
}

TEST(noise, p_err_monte_carlo) {
    auto c = ansatz_fig1(2, 5);
    NoiseBehaviour b = uniform_behaviour(1, c, FaultSpec::explicit_paulis(0.05, {{PauliString::from_str("ZI"), 1.0}}));
    // Z faults never change Z-basis outcomes of a computational state, so the
    // fired fraction must be read off the fault draws directly.
    b.meas = FaultSpec::explicit_paulis(0.05, {{PauliString::from_str("XI"), 1.0}});
    auto hist = sample_histogram(c, b, 5, 0, 50000);
    double flipped = static_cast<double>(hist[0b11 ^ 0b01]) / 50000;
    ASSERT_NEAR(flipped, 0.05, 4 * std::sqrt(0.05 * 0.95 / 50000));
}

TEST(noise, sampling_is_deterministic) {
    auto c = ansatz_fig1(3, 5);
    auto b = global_depolarizing_behaviour(1, c, 0.3);
    ASSERT_EQ(sample_histogram(c, b, 7, 1, 2000), sample_histogram(c, b, 7, 1, 2000));
    ASSERT_NE(sample_histogram(c, b, 7, 1, 2000), sample_histogram(c, b, 8, 1, 2000));
    Rng r1(4), r2(4);
    for (int k = 0; k < 50; ++k) {
        ASSERT_EQ(sample_shot(c, b, r1), sample_shot(c, b, r2));
    }
}

TEST(noise, oracle_limits) {
    auto c = ansatz_fig1(2, 19);
    ASSERT_THROW(exact_noisy_distribution(c, global_depolarizing_behaviour(1, c, 0.1)), std::invalid_argument);
    auto wide = ansatz_fig1(7, 3);
    ASSERT_THROW(exact_noisy_distribution(wide, global_depolarizing_behaviour(1, wide, 0.1)), std::invalid_argument);
}
