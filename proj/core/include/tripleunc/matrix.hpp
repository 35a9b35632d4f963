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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tripleunc {

using Complex = std::complex<double>;

/// Relative tolerance used when validating Hermiticity, normalization and trace.
inline constexpr double kValidationTol = 1e-10;
/// Tolerance for numerical equality assertions.
inline constexpr double kEqualityTol = 1e-9;

/// Dense square matrix of complex doubles stored row-major.
///
/// Every instance has dim >= 1 and only finite entries; operations that could
/// produce a non-finite value are rejected on construction.
class ComplexMatrix {
   public:
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);
    /// Row-major entries; `entries.size()` must be a perfect square.
    static ComplexMatrix from_row_major(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }
    Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// Largest entry modulus.
    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) = default;

    /// Matrix-vector product.
    std::vector<Complex> apply(std::span<const Complex> v) const;

   private:
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Entry ((i*db + k), (j*db + l)) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// ab - ba. Throws DimensionMismatch on unequal dimensions.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// ab + ba.
ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |a - b| entrywise.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |M - M^dagger| <= tol * (1 + max |M|).
bool is_hermitian(const ComplexMatrix &m, double tol = kValidationTol);

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what);

}  // namespace tripleunc
