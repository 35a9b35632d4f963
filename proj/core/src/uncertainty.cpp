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

#include "tripleunc/uncertainty.hpp"

#include <cmath>
#include <string>

#include "tripleunc/error.hpp"

namespace tripleunc {

namespace {

constexpr double kVarianceClamp = 1e-10;
constexpr double kDegenerateVariance = 1e-12;

void require_state_dim(const ObservableTriple &t, const QuantumState &state) {
    if (state.dim() != t.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state dim " + std::to_string(state.dim()) +
                                                      " vs triple dim " + std::to_string(t.dim()));
    }
}

}  // namespace

double variance(const Observable &obs, const QuantumState &state) {
    const ComplexMatrix &m = obs.matrix();
    const double mean = expectation(m, state).real();
    const double second = expectation(m * m, state).real();
    const double v = second - mean * mean;
    if (v >= 0.0) return v;
    if (v < -kVarianceClamp * (1.0 + std::abs(second))) {
        throw Error(ErrorCode::InternalConsistency, "negative variance " + std::to_string(v));
    }
    return 0.0;
}

UncertaintyAudit audit_triple(const ObservableTriple &t, const QuantumState &state) {
    require_state_dim(t, state);
    UncertaintyAudit a;
    for (std::size_t j = 0; j < 3; ++j) {
        a.variances[j] = variance(t[j], state);
        a.commutator_moduli[j] = std::abs(expectation(t.commutator_at(j), state));
    }
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    a.lhs_sum = a.variances[0] + a.variances[1] + a.variances[2];
    a.rhs_sum = inv_sqrt3 * (a.commutator_moduli[0] + a.commutator_moduli[1] + a.commutator_moduli[2]);
    a.lhs_prod = a.variances[0] * a.variances[1] * a.variances[2];
    a.rhs_prod = inv_sqrt3 * inv_sqrt3 * inv_sqrt3 * a.commutator_moduli[0] * a.commutator_moduli[1] *
                 a.commutator_moduli[2];
    a.slack_sum = a.lhs_sum - a.rhs_sum;
    a.slack_prod = a.lhs_prod - a.rhs_prod;
    return a;
}

ObservableTriple center_triple(const ObservableTriple &t, const QuantumState &state) {
    require_state_dim(t, state);
    const auto id = ComplexMatrix::identity(t.dim());
    std::array<Observable, 3> out = t.members();
    for (std::size_t j = 0; j < 3; ++j) {
        const double mean = expectation(t[j], state);
        out[j] = Observable(t[j].matrix() - id * Complex(mean));
    }
    return ObservableTriple(std::move(out));
}

VarianceEqualization equalize_variances(const ObservableTriple &t, const QuantumState &state) {
    require_state_dim(t, state);
    std::array<double, 3> var{};
    for (std::size_t j = 0; j < 3; ++j) {
        var[j] = variance(t[j], state);
        if (var[j] <= kDegenerateVariance) {
            throw Error(ErrorCode::DegenerateVariance,
                        "variance of H" + std::to_string(j + 1) + " is " + std::to_string(var[j]));
        }
    }
    const double geo = std::pow(var[0] * var[1] * var[2], 1.0 / 6.0);
    std::array<double, 3> kappas{};
    std::array<Observable, 3> scaled = t.members();
    for (std::size_t j = 0; j < 3; ++j) {
        kappas[j] = geo / std::sqrt(var[j]);
        scaled[j] = Observable(t[j].matrix() * Complex(kappas[j]));
    }
    return {ObservableTriple(std::move(scaled)), kappas};
}

double robertson_check(const Observable &a, const Observable &b, const QuantumState &state) {
    const double sd = std::sqrt(variance(a, state) * variance(b, state));
    return sd - 0.5 * std::abs(expectation(commutator(a.matrix(), b.matrix()), state));
}

}  // namespace tripleunc
