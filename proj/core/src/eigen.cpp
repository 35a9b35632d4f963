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

#include "tripleunc/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tripleunc/error.hpp"

namespace tripleunc {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

// Applies A <- G^dagger A G and V <- V G for the unitary G that is the
// identity outside rows/columns p, q.
void rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q, Complex gpp,
            Complex gpq, Complex gqp, Complex gqq) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * gpp + akq * gqp;
        a(k, q) = akp * gpq + akq * gqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
        a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * gpp + vkq * gqp;
        v(k, q) = vkp * gpq + vkq * gqq;
    }
}

}  // namespace

std::vector<Complex> EigenDecomposition::vector(std::size_t k) const {
    std::vector<Complex> out(vectors.dim());
    for (std::size_t i = 0; i < vectors.dim(); ++i) out[i] = vectors(i, k);
    return out;
}

EigenDecomposition eig_hermitian(const Observable &m) {
    const std::size_t n = m.dim();
    ComplexMatrix a = m.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                // Phase-rotate so the (p,q) entry is real, then a real Jacobi
                // rotation annihilates it.
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex conj_phase = std::conj(phase);
                rotate(a, v, p, q, c, s, -s * conj_phase, c * conj_phase);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
        for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    }
    if (!converged && off_diagonal_norm(a) > 1e-12 * scale) {
        throw Error(ErrorCode::ConvergenceFailure, "Jacobi sweep cap exhausted");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

double operator_norm(const Observable &m) {
    const auto eig = eig_hermitian(m);
    return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
}

}  // namespace tripleunc
