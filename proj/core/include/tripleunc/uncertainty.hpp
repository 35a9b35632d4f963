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

#pragma once

#include <array>

#include "tripleunc/observable_algebra.hpp"
#include "tripleunc/state.hpp"

namespace tripleunc {

/// <O^2> - <O>^2, with round-off negatives down to -1e-10 (scaled by
/// 1 + <O^2>) clamped to 0. Anything more negative throws InternalConsistency.
double variance(const Observable &obs, const QuantumState &state);

/// Every quantity entering the sum-form and product-form triple relations
///
///   sum_j Var(H_j)  >= (1/sqrt 3)   sum_j  |<[H_j, H_{j+1}]>|
///   prod_j Var(H_j) >= (1/sqrt 3)^3 prod_j |<[H_j, H_{j+1}]>|
///
/// evaluated in one state. Slacks are lhs - rhs; non-negative for every
/// physical state.
struct UncertaintyAudit {
    std::array<double, 3> variances{};
    std::array<double, 3> commutator_moduli{};
    double lhs_sum = 0.0;
    double rhs_sum = 0.0;
    double lhs_prod = 0.0;
    double rhs_prod = 0.0;
    double slack_sum = 0.0;
    double slack_prod = 0.0;
};

UncertaintyAudit audit_triple(const ObservableTriple &t, const QuantumState &state);

/// H_j - <H_j> I, so each centered observable has zero mean in `state`.
/// Commutators are unchanged.
ObservableTriple center_triple(const ObservableTriple &t, const QuantumState &state);

struct VarianceEqualization {
    ObservableTriple triple;
    std::array<double, 3> kappas;
};

/// Rescales H_j by kappa_j = (prod_k Var H_k)^(1/6) / sd(H_j) so all three
/// variances coincide. prod kappa_j = 1, hence both sides of the product
/// relation are unchanged. Throws DegenerateVariance if any variance is at
/// most 1e-12.
VarianceEqualization equalize_variances(const ObservableTriple &t, const QuantumState &state);

/// sd(A) sd(B) - |<[A, B]>| / 2.
double robertson_check(const Observable &a, const Observable &b, const QuantumState &state);

}  // namespace tripleunc
