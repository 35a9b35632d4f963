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
#include <cstddef>

#include "tripleunc/state.hpp"

namespace tripleunc {

/// Index arithmetic on the cyclic set {0, 1, 2}: next(j, 1) is j+1 and
/// next(2, 1) wraps to 0. (In 1-based terms: j+1 of 3 is 1, j+2 of 2 is 1.)
constexpr std::size_t cyclic(std::size_t j, std::size_t shift) noexcept { return (j + shift) % 3; }

/// The Pauli matrices s1, s2, s3, stored 0-based.
///
/// s2 = ((0, -i), (i, 0)); [s_j, s_{j+1}] = 2i s_{j+2} cyclically.
struct PauliSet {
    std::array<Observable, 3> sigma;

    static const PauliSet &get();
    const Observable &operator[](std::size_t j) const { return sigma.at(j); }
};

/// An ordered triple (H1, H2, H3) of observables on one d-dimensional system.
class ObservableTriple {
   public:
    ObservableTriple(Observable h1, Observable h2, Observable h3);
    explicit ObservableTriple(std::array<Observable, 3> h);

    /// (s1, s2, s3).
    static ObservableTriple paulis();

    std::size_t dim() const noexcept { return h_[0].dim(); }
    const Observable &operator[](std::size_t j) const { return h_.at(j); }
    const std::array<Observable, 3> &members() const noexcept { return h_; }

    /// [H_j, H_{j+1}], anti-Hermitian.
    ComplexMatrix commutator_at(std::size_t j) const;
    /// i [H_j, H_{j+1}], Hermitian.
    Observable hermitian_commutator_at(std::size_t j) const;

   private:
    std::array<Observable, 3> h_;
};

/// R = sum_j H_j (x) s_j, of dimension 2d.
Observable build_r(const ObservableTriple &t);

/// sum_j H_j^2 (x) I + sum_j [H_j, H_{j+1}] (x) i s_{j+2}.
///
/// Algebraically equal to build_r(t) squared; computing both is the
/// executable form of that identity.
Observable r_squared_expansion(const ObservableTriple &t);

/// Pairwise anticommutators of C_j = [H_j, H_{j+1}].
struct AnticommutationProfile {
    /// residual[j][k] = ||C_j C_k + C_k C_j||_F for j != k; 0 on the diagonal.
    std::array<std::array<double, 3>, 3> residual{};

    double max_residual() const;
    /// True when every C_j pair anticommutes, i.e. the C_j generate a
    /// Clifford algebra and ||R^2|| can reach 3 + sum_j ||C_j||.
    bool clifford(double tol = kEqualityTol) const { return max_residual() <= tol; }
};

AnticommutationProfile anticommutation_profile(const ObservableTriple &t);

/// max_j ||H_j^2 - I|| (entrywise max).
double involution_defect(const ObservableTriple &t);

}  // namespace tripleunc
