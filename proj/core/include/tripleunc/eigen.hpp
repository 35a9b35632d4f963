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

#include <vector>

#include "tripleunc/matrix.hpp"
#include "tripleunc/state.hpp"

namespace tripleunc {

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    ComplexMatrix vectors;

    std::vector<Complex> vector(std::size_t k) const;
};

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Residuals satisfy ||M v - lambda v|| <= 1e-9 ||M|| and the eigenvectors are
/// orthonormal to 1e-9 for the dimensions this library targets (<= 64).
/// Throws ConvergenceFailure when the sweep cap is exhausted.
EigenDecomposition eig_hermitian(const Observable &m);

/// max |eigenvalue|.
double operator_norm(const Observable &m);

}  // namespace tripleunc
