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

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>

#include "tripleunc/observable_algebra.hpp"
#include "tripleunc/sampling.hpp"
#include "tripleunc/state.hpp"

namespace tripleunc {

/// sqrt(3 + 2 sqrt 3): no separable state has |Tr rho R| above this when
/// every H_j squares to the identity.
double separable_expectation_bound();
/// Upper bounds on Tr rho R^2 and |Tr rho R| for involutive triples.
inline constexpr double kInvolutiveSecondMomentBound = 9.0;
inline constexpr double kInvolutiveExpectationBound = 3.0;
/// Margin by which a threshold must be crossed before declaring entanglement.
inline constexpr double kVerdictMargin = 1e-9;

enum class Verdict { Entangled, Inconclusive };
enum class WitnessMethod { ExpectationThreshold, VarianceFloor };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(WitnessMethod m) noexcept;

struct WitnessReport {
    Verdict verdict = Verdict::Inconclusive;
    /// |Tr rho R|
    double expectation_abs = 0.0;
    /// Tr rho R^2
    double second_moment = 0.0;
    /// Tr rho R^2 - (Tr rho R)^2
    double variance = 0.0;
    double threshold_used = 0.0;
    WitnessMethod method = WitnessMethod::ExpectationThreshold;
    /// Whether every H_j^2 = I to 1e-9.
    bool involutive = false;
};

/// Flags rho as entangled when |Tr rho R| > sqrt(3 + 2 sqrt 3) + 1e-9.
///
/// Requires H_j^2 = I (InvolutionRequired otherwise) and a state on the 2d
/// composite space. The involutive bounds Tr rho R^2 <= 9 and
/// |Tr rho R| <= 3 are checked on the way; a breach throws
/// InternalConsistency.
WitnessReport expectation_witness(const ObservableTriple &t, const QuantumState &rho);

/// 64-bit FNV-1a over the dimension and the bit patterns of every entry.
std::uint64_t triple_fingerprint(const ObservableTriple &t);

struct FloorConfig {
    int restarts = 32;
    int max_iterations = 500;
    /// Objective-change tolerance of each local search.
    double tolerance = 1e-13;
    std::uint64_t seed = 1;
    /// Cross-check against the Bloch-sphere grid (qubit triples only).
    bool grid_check = false;
    double grid_step = std::numbers::pi / 60.0;

    /// Throws ConfigInvalid.
    void validate() const;
};

/// Smallest Var(R) found over pure product states mu (x) nu.
struct FloorEstimate {
    double c;
    QuantumState argmin_mu;
    QuantumState argmin_nu;
    int restarts;
    bool converged;
    std::uint64_t fingerprint;
    /// Present when the grid cross-check ran.
    std::optional<double> grid_value;
};

/// Multi-start minimization of Var(R) over pure product states. Each restart
/// draws a Haar-random (mu, nu) from its own derived seed and descends with
/// BFGS in angle coordinates; the smallest result wins (ties to the lowest
/// restart index). With grid_check on a qubit triple the grid minimum is
/// also computed and adopted if lower.
///
/// Mixtures never go below this minimum, so c bounds Var(R) from below over
/// all separable states (up to the accuracy of the search).
FloorEstimate estimate_variance_floor(const ObservableTriple &t, const FloorConfig &cfg);

/// Flags rho as entangled when Var_rho(R) < floor.c - 1e-9. Throws
/// FloorMismatch if the floor was computed for another triple.
WitnessReport variance_witness(const ObservableTriple &t, const QuantumState &rho,
                               const FloorEstimate &floor);

struct MixtureAudit {
    /// Var(R) in the mixture.
    double lhs;
    /// sum_k lambda_k Var(R) in mu_k (x) nu_k.
    double rhs;
};

/// Both sides of the concavity inequality Var_rho(R) >= sum_k lambda_k Var_k(R).
MixtureAudit separable_mixture_audit(std::span<const ProductComponent> components,
                                     const ObservableTriple &t);

}  // namespace tripleunc
