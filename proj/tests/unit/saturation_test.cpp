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

#include "tripleunc/saturation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "tripleunc/error.hpp"
#include "tripleunc/sampling.hpp"
#include "tripleunc/uncertainty.hpp"

using namespace tripleunc;

namespace {

// <psi| s_j |psi> for psi = (a, b), written out by hand.
std::array<double, 3> pauli_expectations(Complex a, Complex b) {
    const Complex cross = std::conj(a) * b;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

const double kLarge = std::sqrt(0.5 + std::sqrt(3.0) / 6.0);
const double kSmall = std::sqrt(0.5 - std::sqrt(3.0) / 6.0);
const Complex kPhase = std::polar(1.0, std::numbers::pi / 4.0);

}  // namespace

TEST(sign_pattern, validation_and_order) {
    EXPECT_THROW(SignPattern(1, 0, 1), Error);
    EXPECT_THROW(SignPattern(2, 1, 1), Error);
    const auto &all = SignPattern::all();
    std::set<std::string> labels;
    for (std::size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(all[k].case_number(), static_cast<int>(k) + 1);
        labels.insert(all[k].label());
    }
    EXPECT_EQ(labels.size(), 8u);
    EXPECT_EQ(all[0].label(), "+++");
    EXPECT_EQ(all[2].label(), "+-+");
    EXPECT_EQ(all[3].label(), "-++");
    EXPECT_EQ(all[7].label(), "---");
}

TEST(appendix_state, tabulated_amplitudes) {
    const auto first_state = appendix_state(SignPattern(1, 1, 1));
    const auto first = first_state.amplitudes();
    EXPECT_NEAR(std::abs(first[0] - kLarge), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(first[1] - kPhase * kSmall), 0.0, 1e-15);

    const auto last_state = appendix_state(SignPattern(-1, -1, -1));
    const auto last = last_state.amplitudes();
    EXPECT_NEAR(std::abs(last[0] - kSmall), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(last[1] + kPhase * kLarge), 0.0, 1e-15);

    const auto third_state = appendix_state(SignPattern(1, -1, 1));
    const auto third = third_state.amplitudes();
    EXPECT_NEAR(std::abs(third[0] - kLarge), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(third[1] - std::conj(kPhase) * kSmall), 0.0, 1e-15);
}

TEST(appendix_state, expectations_match_signs_for_all_patterns) {
    for (const auto &p : SignPattern::all()) {
        const auto st = appendix_state(p);
        ASSERT_TRUE(st.is_pure());
        const auto amp = st.amplitudes();
        const auto e = pauli_expectations(amp[0], amp[1]);
        double sum_sq = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_NEAR(e[j], p[j] / std::sqrt(3.0), 1e-10) << p.label();
            EXPECT_NEAR(std::abs(e[j]), 1.0 / std::sqrt(3.0), 1e-10);
            sum_sq += e[j] * e[j];
        }
        EXPECT_NEAR(sum_sq, 1.0, 1e-10);
        // Same numbers through the library expectation path.
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(expectation(PauliSet::get()[j], st), e[j], 1e-15);
    }
}

TEST(saturating_partner, pauli_triple_with_tilted_mu) {
    const auto t = ObservableTriple::paulis();
    const auto mu = appendix_state(SignPattern(1, 1, 1));
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(expectation(t.hermitian_commutator_at(j), mu), -2.0 / std::sqrt(3.0), 1e-14);
    }
    const auto sp = saturating_partner(t, mu);
    EXPECT_EQ(sp.pattern, SignPattern(1, 1, 1));
    EXPECT_NEAR(sp.achieved, -2.0, 1e-14);
    EXPECT_NEAR(sp.target, -2.0, 1e-14);
}

TEST(saturating_partner, zero_coefficients_default_to_plus) {
    const auto sp = saturating_partner(ObservableTriple::paulis(), QuantumState::maximally_mixed(2));
    EXPECT_EQ(sp.pattern, SignPattern(1, 1, 1));
    EXPECT_EQ(sp.achieved, 0.0);
    EXPECT_EQ(sp.target, 0.0);
}

TEST(saturating_partner, dimension_mismatch) {
    EXPECT_THROW(saturating_partner(ObservableTriple::paulis(), QuantumState::maximally_mixed(3)), Error);
}

TEST(saturating_partner, random_pairs_reach_target_and_pattern_minimum) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const std::size_t d = 2 + s % 3;
        const auto t = random_hermitian_triple(SampleConfig{derive_seed(9, s), d, {}, 1.0});
        const auto mu = (s & 1) ? haar_pure(SampleConfig{derive_seed(10, s), d, {}, 1.0})
                                : ginibre_density(SampleConfig{derive_seed(10, s), d, {}, 1.0});
        const auto sp = saturating_partner(t, mu);
        ASSERT_NEAR(sp.achieved, sp.target, 1e-9);

        // Brute force over all eight patterns.
        std::array<double, 3> c{};
        for (std::size_t j = 0; j < 3; ++j) c[j] = expectation(t.hermitian_commutator_at(j), mu);
        double brute = std::numeric_limits<double>::infinity();
        for (const auto &p : SignPattern::all()) {
            double v = 0.0;
            for (std::size_t j = 0; j < 3; ++j) v += c[j] * p[cyclic(j, 2)] / std::sqrt(3.0);
            brute = std::min(brute, v);
        }
        ASSERT_NEAR(sp.achieved, brute, 1e-12);
    }
}

TEST(saturating_partner, product_chain_is_tight_for_pauli_triple) {
    const auto t = ObservableTriple::paulis();
    const Observable r = build_r(t);
    for (const auto &p : SignPattern::all()) {
        const auto mu = appendix_state(p);
        const auto sp = saturating_partner(t, mu);
        const auto prod = product_state(mu, sp.nu);
        const double m1 = expectation(r, prod);
        const double m2 = expectation(r.matrix() * r.matrix(), prod).real();
        double sum_var = 0.0;
        for (std::size_t j = 0; j < 3; ++j) sum_var += variance(t[j], mu);
        EXPECT_NEAR(m2 - m1 * m1, sum_var + sp.achieved, 1e-9) << p.label();
        EXPECT_NEAR(m2 - m1 * m1, 0.0, 1e-9);
    }
}
