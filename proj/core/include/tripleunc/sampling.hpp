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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "tripleunc/observable_algebra.hpp"
#include "tripleunc/state.hpp"

namespace tripleunc {

/// SplitMix64 finalizer applied to base + stream * golden-ratio increment.
/// Distinct (base, stream) pairs give statistically independent seeds; this
/// is how every campaign hands each trial its own generator.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

/// Deterministic generator: mt19937_64 plus hand-rolled uniform and
/// Box-Muller transforms, so the output is bit-identical across standard
/// library implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(derive_seed(seed, 0)) {}

    /// Uniform on the open interval (0, 1).
    double uniform();
    double normal();
    /// Real and imaginary parts i.i.d. N(0, 1/2).
    Complex complex_normal();
    std::uint64_t next_u64() { return engine_(); }

   private:
    std::mt19937_64 engine_;
};

struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t dim = 2;
    /// Ginibre rank; unset means full rank.
    std::optional<std::size_t> rank;
    /// Spread of random Hermitian observables.
    double scale = 1.0;

    /// Throws ConfigInvalid.
    void validate() const;
    SampleConfig with_seed(std::uint64_t s) const {
        SampleConfig c = *this;
        c.seed = s;
        return c;
    }
};

/// Normalized vector of i.i.d. complex Gaussians (Haar distributed).
QuantumState haar_pure(const SampleConfig &cfg);

/// G G^dagger / Tr(G G^dagger) with G a dim x rank complex Gaussian matrix.
QuantumState ginibre_density(const SampleConfig &cfg);

/// Haar unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix haar_unitary(const SampleConfig &cfg);

/// (G + G^dagger) / 2 scaled by cfg.scale (GUE-like).
Observable random_hermitian(const SampleConfig &cfg);
ObservableTriple random_hermitian_triple(const SampleConfig &cfg);

/// H_j = U_j D_j U_j^dagger with D_j = diag(+-1) containing both signs when
/// dim >= 2, so H_j^2 = I to round-off.
ObservableTriple random_involutive_triple(const SampleConfig &cfg);

/// One term lambda * mu (x) nu of a separable mixture.
struct ProductComponent {
    double weight;
    QuantumState mu;
    QuantumState nu;
};

/// `components` Haar pure products with Dirichlet(1, ..., 1) weights. The
/// first factor has cfg.dim, the second `second_dim` (cfg.dim when unset).
std::vector<ProductComponent> random_separable_components(
    const SampleConfig &cfg, std::size_t components, std::optional<std::size_t> second_dim = {});

/// sum_k lambda_k mu_k (x) nu_k. Throws WeightInvalid when weights are
/// negative or do not sum to 1 within 1e-10.
QuantumState mixture_density(std::span<const ProductComponent> components);

/// Random separable state on dim x dim.
QuantumState random_separable(const SampleConfig &cfg, std::size_t components);

}  // namespace tripleunc
