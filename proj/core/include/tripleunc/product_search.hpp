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
#include <functional>
#include <span>
#include <vector>

#include "tripleunc/observable_algebra.hpp"
#include "tripleunc/state.hpp"

namespace tripleunc {

// Pure states of dimension m are described by 2m - 2 real angles: m - 1
// hyperspherical angles for the moduli followed by m - 1 relative phases
// (the phase of the first amplitude is fixed to zero).

inline constexpr std::size_t angle_count(std::size_t dim) noexcept { return 2 * dim - 2; }

std::vector<Complex> amplitudes_from_angles(std::span<const double> angles, std::size_t dim);
std::vector<double> angles_from_amplitudes(std::span<const Complex> amplitudes);

/// Variance of R in mu (x) nu from subsystem moments:
///
///   Tr R^2 = sum_j <H_j^2> + sum_j <i[H_j, H_{j+1}]> b_{j+2}
///   Tr R   = sum_j <H_j> b_j
///
/// where b is the Bloch vector of nu.
class ProductVarianceModel {
   public:
    explicit ProductVarianceModel(const ObservableTriple &t);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t parameter_count() const noexcept { return angle_count(dim_) + 2; }

    double variance(std::span<const Complex> mu, const std::array<double, 3> &nu_bloch) const;
    /// Parameters: angle_count(dim) angles for mu, then 2 for nu.
    double variance_at(std::span<const double> params) const;

   private:
    std::size_t dim_;
    std::array<ComplexMatrix, 3> h_;
    std::array<ComplexMatrix, 3> h_sq_;
    std::array<ComplexMatrix, 3> ic_;
};

struct LocalSearchOptions {
    int max_iterations = 500;
    /// Stop once the objective changes by less than this over three
    /// consecutive iterations.
    double tolerance = 1e-13;
    double fd_step = 1e-6;
};

struct LocalSearchResult {
    std::vector<double> x;
    double value;
    int iterations;
    bool converged;
};

/// Quasi-Newton (BFGS) descent with central-difference gradients and an
/// Armijo backtracking line search.
LocalSearchResult minimize_bfgs(const std::function<double(std::span<const double>)> &f,
                                std::vector<double> x0, const LocalSearchOptions &opts);

struct GridMinimum {
    double value;
    QuantumState mu;
    QuantumState nu;
};

/// Minimum of Var(R) over qubit product states: a polar/azimuthal grid of
/// spacing `step` on both Bloch spheres followed by a shrinking pattern
/// search around the best grid cells. Requires t.dim() == 2.
GridMinimum bloch_grid_minimum(const ObservableTriple &t, double step);

}  // namespace tripleunc
