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

#include "tripleunc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tripleunc/error.hpp"

namespace tripleunc {

namespace {

std::size_t checked_dim(std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
    }
    return dim;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(checked_dim(dim)), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(checked_dim(dim)), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                        std::to_string(data_.size()));
    }
    if (!all_finite()) {
        throw Error(ErrorCode::NonFinite, "matrix has a NaN or infinite entry");
    }
}

ComplexMatrix ComplexMatrix::from_row_major(std::size_t dim, std::vector<Complex> entries) {
    return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(checked_dim(rows.size())) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!all_finite()) {
        throw Error(ErrorCode::NonFinite, "matrix has a NaN or infinite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "matrix addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "matrix subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector product: vector length " +
                                                      std::to_string(v.size()) + " vs dim " +
                                                      std::to_string(dim_));
    }
    std::vector<Complex> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    const std::size_t n = m.dim();
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    }
    return dev <= tol * (1.0 + m.max_abs());
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": " + std::to_string(a.dim()) +
                                                      " vs " + std::to_string(b.dim()));
    }
}

}  // namespace tripleunc
