// Copyright 2026 The tripleunc Authors
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

#include "tripleunc/state.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tripleunc/error.hpp"
#include "tripleunc/observable_algebra.hpp"
#include "tripleunc/sampling.hpp"

using namespace tripleunc;

TEST(quantum_state, validation) {
    EXPECT_THROW(QuantumState::pure({1.0, 1.0}), Error);
    EXPECT_THROW(QuantumState::pure({}), Error);
    EXPECT_THROW(QuantumState::pure_normalized({0.0, 0.0}), Error);
    EXPECT_THROW(QuantumState::mixed(ComplexMatrix::identity(2)), Error);  // trace 2
    // Unit trace but a negative eigenvalue.
    EXPECT_THROW(QuantumState::mixed(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), Error);
    EXPECT_NO_THROW(QuantumState::mixed(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}));
}

TEST(expectation, identity_in_any_state_is_one) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto pure = haar_pure(SampleConfig{s, 3, {}, 1.0});
        const auto mixed = ginibre_density(SampleConfig{s, 3, {}, 1.0});
        EXPECT_NEAR(std::abs(expectation(ComplexMatrix::identity(3), pure) - 1.0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(expectation(ComplexMatrix::identity(3), mixed) - 1.0), 0.0, 1e-12);
    }
}

TEST(expectation, pauli_examples) {
    const auto &s = PauliSet::get();
    EXPECT_DOUBLE_EQ(expectation(s[2], QuantumState::basis(2, 0)), 1.0);
    EXPECT_DOUBLE_EQ(expectation(s[0], QuantumState::maximally_mixed(2)), 0.0);
}

TEST(expectation, hermitian_gives_real_value) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto h = random_hermitian(SampleConfig{s, 4, {}, 3.0});
        const auto rho = ginibre_density(SampleConfig{s + 7, 4, {}, 1.0});
        const auto psi = haar_pure(SampleConfig{s + 9, 4, {}, 1.0});
        EXPECT_LE(std::abs(expectation(h.matrix(), rho).imag()), 1e-10);
        EXPECT_LE(std::abs(expectation(h.matrix(), psi).imag()), 1e-10);
        // Pure path agrees with the density path.
        const auto as_mixed = QuantumState::mixed(psi.density());
        EXPECT_NEAR(expectation(h, psi), expectation(h, as_mixed), 1e-12);
    }
}

TEST(expectation, dimension_mismatch) {
    try {
        expectation(ComplexMatrix::identity(3), QuantumState::basis(2, 0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(bloch_vector, plus_state_and_mixture) {
    const double r = 1.0 / std::numbers::sqrt2;
    const auto plus = QuantumState::pure({r, r});
    const auto b = bloch_vector(plus);
    EXPECT_NEAR(b[0], 1.0, 1e-15);
    EXPECT_NEAR(b[1], 0.0, 1e-15);
    EXPECT_NEAR(b[2], 0.0, 1e-15);
    const auto plus_i = QuantumState::pure({r, Complex(0.0, r)});
    EXPECT_NEAR(bloch_vector(plus_i)[1], 1.0, 1e-15);
    for (double x : bloch_vector(QuantumState::maximally_mixed(2))) EXPECT_EQ(x, 0.0);
}

TEST(product_state, pure_and_mixed_agree) {
    const auto mu = haar_pure(SampleConfig{1, 3, {}, 1.0});
    const auto nu = haar_pure(SampleConfig{2, 2, {}, 1.0});
    const auto pure = product_state(mu, nu);
    EXPECT_TRUE(pure.is_pure());
    const auto mixed = product_state(QuantumState::mixed(mu.density()), nu);
    EXPECT_FALSE(mixed.is_pure());
    EXPECT_LE(max_abs_diff(pure.density(), mixed.density()), 1e-14);
}
