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

#include <cmath>
#include <string>

#include "tripleunc/eigen.hpp"
#include "tripleunc/error.hpp"

namespace tripleunc {

Observable::Observable(ComplexMatrix m) : m_(std::move(m)) {
    if (!is_hermitian(m_)) {
        throw Error(ErrorCode::NotHermitian, "observable of dimension " + std::to_string(m_.dim()) +
                                                 " is not Hermitian");
    }
}

namespace {

double squared_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto &z : v) s += std::norm(z);
    return s;
}

}  // namespace

QuantumState QuantumState::pure(std::vector<Complex> amplitudes) {
    if (amplitudes.empty()) {
        throw Error(ErrorCode::InvalidState, "pure state needs at least one amplitude");
    }
    for (const auto &z : amplitudes) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::NonFinite, "pure state has a non-finite amplitude");
        }
    }
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (std::abs(norm - 1.0) > kValidationTol) {
        throw Error(ErrorCode::InvalidState, "pure state norm is " + std::to_string(norm));
    }
    return QuantumState(Kind::Pure, std::move(amplitudes), std::nullopt);
}

QuantumState QuantumState::pure_normalized(std::vector<Complex> amplitudes) {
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorCode::InvalidState, "cannot normalize a zero or non-finite vector");
    }
    for (auto &z : amplitudes) z /= norm;
    return pure(std::move(amplitudes));
}

QuantumState QuantumState::mixed(ComplexMatrix density) {
    if (!is_hermitian(density)) {
        throw Error(ErrorCode::InvalidState, "density matrix is not Hermitian");
    }
    const Complex tr = density.trace();
    if (std::abs(tr - 1.0) > kValidationTol) {
        throw Error(ErrorCode::InvalidState, "density matrix trace is " + std::to_string(tr.real()));
    }
    const auto eig = eig_hermitian(Observable(density));
    if (eig.values.front() < -kValidationTol) {
        throw Error(ErrorCode::InvalidState,
                    "density matrix has negative eigenvalue " + std::to_string(eig.values.front()));
    }
    return QuantumState(Kind::Mixed, {}, std::move(density));
}

QuantumState QuantumState::maximally_mixed(std::size_t dim) {
    return mixed(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    }
    std::vector<Complex> v(dim);
    v[index] = 1.0;
    return pure(std::move(v));
}

std::size_t QuantumState::dim() const noexcept {
    return kind_ == Kind::Pure ? vector_.size() : density_->dim();
}

std::span<const Complex> QuantumState::amplitudes() const {
    if (kind_ != Kind::Pure) {
        throw Error(ErrorCode::InvalidArgument, "amplitudes requested from a mixed state");
    }
    return vector_;
}

ComplexMatrix QuantumState::density() const {
    return kind_ == Kind::Pure ? ComplexMatrix::outer(vector_) : *density_;
}

Complex expectation(const ComplexMatrix &obs, const QuantumState &state) {
    if (obs.dim() != state.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "expectation: observable dim " +
                                                      std::to_string(obs.dim()) + " vs state dim " +
                                                      std::to_string(state.dim()));
    }
    const std::size_t n = obs.dim();
    Complex acc = 0.0;
    if (state.is_pure()) {
        const auto v = state.amplitudes();
        for (std::size_t i = 0; i < n; ++i) {
            Complex row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += obs(i, j) * v[j];
            acc += std::conj(v[i]) * row;
        }
    } else {
        // Tr(rho A) = sum_ij rho_ij A_ji
        const ComplexMatrix rho = state.density();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) acc += rho(i, j) * obs(j, i);
        }
    }
    return acc;
}

QuantumState product_state(const QuantumState &mu, const QuantumState &nu) {
    if (mu.is_pure() && nu.is_pure()) {
        const auto a = mu.amplitudes();
        const auto b = nu.amplitudes();
        std::vector<Complex> v;
        v.reserve(a.size() * b.size());
        for (const auto &x : a) {
            for (const auto &y : b) v.push_back(x * y);
        }
        return QuantumState::pure_normalized(std::move(v));
    }
    return QuantumState::mixed(kron(mu.density(), nu.density()));
}

std::array<double, 3> bloch_vector(const QuantumState &qubit) {
    if (qubit.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "Bloch vector needs a qubit state");
    }
    const ComplexMatrix rho = qubit.density();
    // rho = (I + r.sigma)/2
    return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

}  // namespace tripleunc
