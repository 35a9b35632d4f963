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

#include "tripleunc/witness.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tripleunc/eigen.hpp"
#include "tripleunc/error.hpp"
#include "tripleunc/uncertainty.hpp"

using namespace tripleunc;

namespace {

QuantumState singlet() {
    const double r = 1.0 / std::sqrt(2.0);
    return QuantumState::pure({0.0, r, -r, 0.0});
}

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(separable_expectation_bound, value) {
    // sqrt(3 + 2 sqrt 3) to 20 digits: 2.5424597568374124783
    EXPECT_NEAR(separable_expectation_bound(), 2.54245975683741247827, 1e-12);
}

TEST(expectation_witness, singlet_is_entangled) {
    const auto rep = expectation_witness(ObservableTriple::paulis(), singlet());
    EXPECT_EQ(rep.verdict, Verdict::Entangled);
    EXPECT_NEAR(rep.expectation_abs, 3.0, 1e-12);
    EXPECT_NEAR(rep.second_moment, 9.0, 1e-12);
    EXPECT_NEAR(rep.variance, 0.0, 1e-12);
    EXPECT_TRUE(rep.involutive);
    EXPECT_EQ(rep.method, WitnessMethod::ExpectationThreshold);
    EXPECT_DOUBLE_EQ(rep.threshold_used, separable_expectation_bound());
}

TEST(expectation_witness, product_and_mixed_are_inconclusive) {
    const auto zz = expectation_witness(ObservableTriple::paulis(), QuantumState::basis(4, 0));
    EXPECT_EQ(zz.verdict, Verdict::Inconclusive);
    EXPECT_NEAR(zz.expectation_abs, 1.0, 1e-15);
    const auto mm = expectation_witness(ObservableTriple::paulis(), QuantumState::maximally_mixed(4));
    EXPECT_EQ(mm.verdict, Verdict::Inconclusive);
    EXPECT_NEAR(mm.expectation_abs, 0.0, 1e-15);
}

TEST(expectation_witness, errors) {
    const auto &s = PauliSet::get();
    const ObservableTriple scaled(s[0], Observable(2.0 * s[1].matrix()), s[2]);
    EXPECT_EQ(code_of([&] { expectation_witness(scaled, singlet()); }), ErrorCode::InvolutionRequired);
    EXPECT_EQ(code_of([&] { expectation_witness(ObservableTriple::paulis(), QuantumState::basis(2, 0)); }),
              ErrorCode::DimensionMismatch);
}

TEST(expectation_witness, separable_states_never_flagged) {
    for (std::uint64_t s = 0; s < 2000; ++s) {
        const auto t = random_involutive_triple(SampleConfig{derive_seed(1, s % 20), 2, {}, 1.0});
        const auto rho = random_separable(SampleConfig{derive_seed(2, s), 2, {}, 1.0}, 1 + s % 5);
        const auto rep = expectation_witness(t, rho);
        ASSERT_EQ(rep.verdict, Verdict::Inconclusive) << s;
        ASSERT_LE(rep.expectation_abs * rep.expectation_abs, rep.second_moment + 1e-9);
    }
}

TEST(expectation_witness, higher_dimensional_involutions) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto t = random_involutive_triple(SampleConfig{s, 3, {}, 1.0});
        const auto mu = haar_pure(SampleConfig{derive_seed(s, 1), 3, {}, 1.0});
        const auto nu = haar_pure(SampleConfig{derive_seed(s, 2), 2, {}, 1.0});
        const auto rep = expectation_witness(t, product_state(mu, nu));
        EXPECT_LE(rep.expectation_abs, separable_expectation_bound() + 1e-9);
        const auto any = expectation_witness(t, haar_pure(SampleConfig{derive_seed(s, 3), 6, {}, 1.0}));
        EXPECT_LE(any.second_moment, 9.0 + 1e-9);
    }
}

TEST(triple_fingerprint, distinguishes_triples_and_ignores_signed_zero) {
    const auto a = triple_fingerprint(ObservableTriple::paulis());
    EXPECT_EQ(a, triple_fingerprint(ObservableTriple::paulis()));
    const auto &s = PauliSet::get();
    EXPECT_NE(a, triple_fingerprint(ObservableTriple(s[1], s[0], s[2])));
    const ObservableTriple neg(Observable(ComplexMatrix{{-0.0, 1.0}, {1.0, 0.0}}), s[1], s[2]);
    EXPECT_EQ(a, triple_fingerprint(neg));
}

TEST(estimate_variance_floor, config_validation) {
    FloorConfig cfg;
    cfg.restarts = 0;
    EXPECT_EQ(code_of([&] { estimate_variance_floor(ObservableTriple::paulis(), cfg); }), ErrorCode::ConfigInvalid);
    cfg = FloorConfig{};
    cfg.grid_check = true;
    const auto t3 = random_hermitian_triple(SampleConfig{1, 3, {}, 1.0});
    EXPECT_EQ(code_of([&] { estimate_variance_floor(t3, cfg); }), ErrorCode::ConfigInvalid);
    cfg.grid_step = 0.2;
    EXPECT_EQ(code_of([&] { estimate_variance_floor(ObservableTriple::paulis(), cfg); }), ErrorCode::ConfigInvalid);
}

TEST(estimate_variance_floor, pauli_triple_has_zero_floor_at_aligned_product) {
    FloorConfig cfg;
    cfg.restarts = 8;
    const auto f = estimate_variance_floor(ObservableTriple::paulis(), cfg);
    EXPECT_LE(f.c, 1e-9);
    EXPECT_TRUE(f.converged);
    const auto a = bloch_vector(f.argmin_mu);
    const auto b = bloch_vector(f.argmin_nu);
    EXPECT_NEAR(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], 1.0, 1e-6);
    // |00> is such a product: an eigenvector of R with eigenvalue 1.
    const auto zz = QuantumState::basis(4, 0);
    EXPECT_NEAR(variance(build_r(ObservableTriple::paulis()), zz), 0.0, 1e-15);
}

TEST(estimate_variance_floor, commuting_triple_has_zero_floor) {
    const auto &s = PauliSet::get();
    const ObservableTriple t(s[2], s[2], s[2]);
    const auto f = estimate_variance_floor(t, FloorConfig{});
    EXPECT_LE(f.c, 1e-9);
}

TEST(estimate_variance_floor, qubit_triples_match_oracle) {
    FloorConfig cfg;
    cfg.restarts = 32;
    for (std::uint64_t s = 0; s < 4; ++s) {
        const auto t = random_hermitian_triple(SampleConfig{derive_seed(404, s), 2, {}, 1.0});
        cfg.seed = s + 1;
        const auto f = estimate_variance_floor(t, cfg);
        const auto o = tripleunc::testing::bloch_sphere_floor_oracle(t, std::numbers::pi / 60.0);
        EXPECT_NEAR(f.c, o.value, 1e-6) << s;
        EXPECT_NEAR(f.c, variance(build_r(t), product_state(f.argmin_mu, f.argmin_nu)), 1e-9);
        EXPECT_EQ(f.fingerprint, triple_fingerprint(t));
    }
}

TEST(estimate_variance_floor, restart_count_stability) {
    const auto t = random_hermitian_triple(SampleConfig{derive_seed(405, 0), 2, {}, 1.0});
    FloorConfig few;
    few.restarts = 32;
    FloorConfig many;
    many.restarts = 256;
    const auto a = estimate_variance_floor(t, few);
    const auto b = estimate_variance_floor(t, many);
    EXPECT_NEAR(a.c, b.c, 1e-6);
    EXPECT_TRUE(a.converged);
    EXPECT_TRUE(b.converged);
}

TEST(estimate_variance_floor, grid_check_is_recorded) {
    FloorConfig cfg;
    cfg.restarts = 4;
    cfg.grid_check = true;
    const auto t = random_hermitian_triple(SampleConfig{17, 2, {}, 1.0});
    const auto f = estimate_variance_floor(t, cfg);
    ASSERT_TRUE(f.grid_value.has_value());
    EXPECT_NEAR(*f.grid_value, f.c, 1e-6);
}

TEST(estimate_variance_floor, qutrit_triple_and_determinism) {
    FloorConfig cfg;
    cfg.restarts = 6;
    cfg.seed = 9;
    const auto t = random_hermitian_triple(SampleConfig{23, 3, {}, 1.0});
    const auto a = estimate_variance_floor(t, cfg);
    const auto b = estimate_variance_floor(t, cfg);
    EXPECT_EQ(a.c, b.c);
    EXPECT_GE(a.c, 0.0);
    EXPECT_NEAR(a.c, variance(build_r(t), product_state(a.argmin_mu, a.argmin_nu)), 1e-9);
    // Random product states never go below the estimate.
    for (std::uint64_t s = 0; s < 500; ++s) {
        const auto mu = haar_pure(SampleConfig{derive_seed(s, 5), 3, {}, 1.0});
        const auto nu = haar_pure(SampleConfig{derive_seed(s, 6), 2, {}, 1.0});
        EXPECT_GE(variance(build_r(t), product_state(mu, nu)), a.c - 1e-9);
    }
}

TEST(variance_witness, entangled_eigenvector_is_flagged) {
    // Fixture: a qubit triple whose R has a non-degenerate entangled
    // eigenvector and a strictly positive product-state floor.
    const auto t = random_hermitian_triple(SampleConfig{2024, 2, {}, 1.0});
    FloorConfig cfg;
    cfg.restarts = 16;
    const auto floor = estimate_variance_floor(t, cfg);
    ASSERT_GT(floor.c, 1e-3);
    const auto eig = eig_hermitian(build_r(t));
    for (std::size_t k = 1; k < 4; ++k) ASSERT_GT(eig.values[k] - eig.values[k - 1], 1e-6);
    const auto v = QuantumState::pure_normalized(eig.vector(0));
    EXPECT_LT(tripleunc::testing::min_partial_transpose_eigenvalue(v.density(), 2, 2), -1e-6);
    const auto rep = variance_witness(t, v, floor);
    EXPECT_EQ(rep.verdict, Verdict::Entangled);
    EXPECT_EQ(rep.method, WitnessMethod::VarianceFloor);
    EXPECT_NEAR(rep.variance, 0.0, 1e-10);
    EXPECT_EQ(rep.threshold_used, floor.c);

    const auto boundary = variance_witness(t, product_state(floor.argmin_mu, floor.argmin_nu), floor);
    EXPECT_EQ(boundary.verdict, Verdict::Inconclusive);
    EXPECT_NEAR(boundary.variance, floor.c, 1e-9);
}

TEST(variance_witness, pauli_floor_never_flags) {
    const auto t = ObservableTriple::paulis();
    FloorConfig cfg;
    cfg.restarts = 4;
    const auto floor = estimate_variance_floor(t, cfg);
    EXPECT_EQ(variance_witness(t, singlet(), floor).verdict, Verdict::Inconclusive);
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto st = (s & 1) ? haar_pure(SampleConfig{s, 4, {}, 1.0}) : ginibre_density(SampleConfig{s, 4, {}, 1.0});
        EXPECT_EQ(variance_witness(t, st, floor).verdict, Verdict::Inconclusive);
    }
}

TEST(variance_witness, rejects_foreign_floor_and_bad_dimension) {
    FloorConfig cfg;
    cfg.restarts = 2;
    const auto floor = estimate_variance_floor(ObservableTriple::paulis(), cfg);
    const auto other = random_hermitian_triple(SampleConfig{3, 2, {}, 1.0});
    EXPECT_EQ(code_of([&] { variance_witness(other, singlet(), floor); }), ErrorCode::FloorMismatch);
    EXPECT_EQ(code_of([&] { variance_witness(ObservableTriple::paulis(), QuantumState::basis(2, 0), floor); }),
              ErrorCode::DimensionMismatch);
}

TEST(separable_mixture_audit, single_component_is_tight) {
    const auto parts = random_separable_components(SampleConfig{5, 2, {}, 1.0}, 1);
    const auto a = separable_mixture_audit(parts, ObservableTriple::paulis());
    EXPECT_NEAR(a.lhs, a.rhs, 1e-12);
}

TEST(separable_mixture_audit, computational_basis_mixture) {
    const std::vector<ProductComponent> parts{
        {0.5, QuantumState::basis(2, 0), QuantumState::basis(2, 0)},
        {0.5, QuantumState::basis(2, 1), QuantumState::basis(2, 1)},
    };
    const auto a = separable_mixture_audit(parts, ObservableTriple::paulis());
    // Both |00> and |11> are eigenvectors of R with eigenvalue 1.
    EXPECT_NEAR(a.lhs, 0.0, 1e-14);
    EXPECT_NEAR(a.rhs, 0.0, 1e-14);
    EXPECT_GE(a.lhs - a.rhs, -1e-9);

    // |00> and |01>: eigenvalues 1 and -1, so the mixture has variance 1.
    const std::vector<ProductComponent> split{
        {0.5, QuantumState::basis(2, 0), QuantumState::basis(2, 0)},
        {0.5, QuantumState::basis(2, 0), QuantumState::basis(2, 1)},
    };
    const auto b = separable_mixture_audit(split, ObservableTriple::paulis());
    EXPECT_GT(b.lhs, b.rhs);
}

TEST(separable_mixture_audit, fuzzed_concavity) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const std::size_t d = 2 + s % 2;
        const auto t = random_hermitian_triple(SampleConfig{derive_seed(61, s), d, {}, 1.0});
        const auto parts = random_separable_components(SampleConfig{derive_seed(62, s), d, {}, 1.0}, 1 + s % 5, 2);
        const auto a = separable_mixture_audit(parts, t);
        ASSERT_GE(a.lhs, a.rhs - 1e-9) << s;
    }
}

TEST(separable_mixture_audit, invalid_weights) {
    auto parts = random_separable_components(SampleConfig{5, 2, {}, 1.0}, 3);
    parts[1].weight = -0.2;
    EXPECT_EQ(code_of([&] { separable_mixture_audit(parts, ObservableTriple::paulis()); }), ErrorCode::WeightInvalid);
}
