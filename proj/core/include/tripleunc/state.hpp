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
#include <optional>
#include <span>
#include <vector>

#include "tripleunc/matrix.hpp"

namespace tripleunc {

/// A Hermitian matrix. Construction validates Hermiticity to kValidationTol
/// (relative) and throws ErrorCode::NotHermitian otherwise.
class Observable {
   public:
    explicit Observable(ComplexMatrix m);

    static Observable identity(std::size_t dim) { return Observable(ComplexMatrix::identity(dim)); }
    static Observable zero(std::size_t dim) { return Observable(ComplexMatrix(dim)); }

    const ComplexMatrix &matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }

   private:
    ComplexMatrix m_;
};

/// A pure vector or a density matrix.
///
/// Pure states are unit vectors (within kValidationTol). Mixed states are
/// Hermitian, unit trace and have no eigenvalue below -kValidationTol.
class QuantumState {
   public:
    enum class Kind { Pure, Mixed };

    static QuantumState pure(std::vector<Complex> amplitudes);
    /// Normalizes the vector first; throws InvalidState on a zero vector.
    static QuantumState pure_normalized(std::vector<Complex> amplitudes);
    static QuantumState mixed(ComplexMatrix density);
    /// I/dim.
    static QuantumState maximally_mixed(std::size_t dim);
    /// Computational basis vector |index>.
    static QuantumState basis(std::size_t dim, std::size_t index);

    Kind kind() const noexcept { return kind_; }
    bool is_pure() const noexcept { return kind_ == Kind::Pure; }
    std::size_t dim() const noexcept;

    /// Amplitudes; only valid for pure states.
    std::span<const Complex> amplitudes() const;
    /// Density matrix (|v><v| for pure states).
    ComplexMatrix density() const;

   private:
    QuantumState(Kind kind, std::vector<Complex> v, std::optional<ComplexMatrix> rho)
        : kind_(kind), vector_(std::move(v)), density_(std::move(rho)) {}

    Kind kind_;
    std::vector<Complex> vector_;
    std::optional<ComplexMatrix> density_;
};

/// Tr(rho * obs) or <v|obs|v>. Throws DimensionMismatch.
Complex expectation(const ComplexMatrix &obs, const QuantumState &state);
inline double expectation(const Observable &obs, const QuantumState &state) {
    return expectation(obs.matrix(), state).real();
}

/// mu (x) nu as a state on the composite space; pure when both factors are pure.
QuantumState product_state(const QuantumState &mu, const QuantumState &nu);

/// Computational-basis Bloch vector (<s1>, <s2>, <s3>) of a qubit state.
std::array<double, 3> bloch_vector(const QuantumState &qubit);

}  // namespace tripleunc
