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

#include "tripleunc/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tripleunc/error.hpp"

namespace tripleunc {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    // 53 random mantissa bits, shifted off zero.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

void SampleConfig::validate() const {
    if (dim == 0) throw Error(ErrorCode::ConfigInvalid, "dim must be positive");
    if (rank && (*rank == 0 || *rank > dim)) {
        throw Error(ErrorCode::ConfigInvalid,
                    "rank must lie in [1, dim]; got " + std::to_string(*rank));
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw Error(ErrorCode::ConfigInvalid, "scale must be positive and finite");
    }
}

namespace {

std::vector<Complex> gaussian_vector(Rng &rng, std::size_t n) {
    std::vector<Complex> v(n);
    for (auto &z : v) z = rng.complex_normal();
    return v;
}

}  // namespace

QuantumState haar_pure(const SampleConfig &cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    auto v = gaussian_vector(rng, cfg.dim);
    // Global phase fixed so the first amplitude is real and non-negative.
    const Complex phase = std::polar(1.0, -std::arg(v[0]));
    for (auto &z : v) z *= phase;
    v[0] = std::abs(v[0]);
    return QuantumState::pure_normalized(std::move(v));
}

QuantumState ginibre_density(const SampleConfig &cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t n = cfg.dim;
    const std::size_t k = cfg.rank.value_or(n);
    std::vector<Complex> g(n * k);
    for (auto &z : g) z = rng.complex_normal();
    ComplexMatrix rho(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t c = 0; c < k; ++c) s += g[i * k + c] * std::conj(g[j * k + c]);
            rho(i, j) = s;
        }
    }
    rho *= Complex(1.0 / rho.trace().real());
    for (std::size_t i = 0; i < n; ++i) rho(i, i) = rho(i, i).real();
    return QuantumState::mixed(std::move(rho));
}

ComplexMatrix haar_unitary(const SampleConfig &cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t n = cfg.dim;
    std::vector<std::vector<Complex>> cols(n);
    for (auto &c : cols) c = gaussian_vector(rng, n);
    // Modified Gram-Schmidt, two passes. The implied R factor has a positive
    // diagonal, which is what makes Q Haar distributed.
    for (std::size_t k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                Complex dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(cols[j][i]) * cols[k][i];
                for (std::size_t i = 0; i < n; ++i) cols[k][i] -= dot * cols[j][i];
            }
        }
        double norm = 0.0;
        for (const auto &z : cols[k]) norm += std::norm(z);
        norm = std::sqrt(norm);
        for (auto &z : cols[k]) z /= norm;
    }
    ComplexMatrix u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) u(i, j) = cols[j][i];
    }
    return u;
}

namespace {

Observable symmetrized(const ComplexMatrix &m) {
    return Observable((m + m.adjoint()) * Complex(0.5));
}

}  // namespace

Observable random_hermitian(const SampleConfig &cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const std::size_t n = cfg.dim;
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    }
    return symmetrized(g * Complex(cfg.scale));
}

ObservableTriple random_hermitian_triple(const SampleConfig &cfg) {
    return ObservableTriple(random_hermitian(cfg.with_seed(derive_seed(cfg.seed, 1))),
                            random_hermitian(cfg.with_seed(derive_seed(cfg.seed, 2))),
                            random_hermitian(cfg.with_seed(derive_seed(cfg.seed, 3))));
}

namespace {

Observable random_involution(const SampleConfig &cfg) {
    const std::size_t n = cfg.dim;
    Rng rng(derive_seed(cfg.seed, 100));
    std::vector<double> signs(n);
    for (auto &s : signs) s = (rng.next_u64() >> 63) ? 1.0 : -1.0;
    if (n >= 2) {
        bool has_plus = false;
        bool has_minus = false;
        for (double s : signs) (s > 0 ? has_plus : has_minus) = true;
        if (!has_plus || !has_minus) {
            const std::size_t flip = static_cast<std::size_t>(rng.next_u64() % n);
            signs[flip] = -signs[flip];
        }
    }
    const ComplexMatrix u = haar_unitary(cfg);
    return symmetrized(u * ComplexMatrix::diagonal(signs) * u.adjoint());
}

}  // namespace

ObservableTriple random_involutive_triple(const SampleConfig &cfg) {
    cfg.validate();
    return ObservableTriple(random_involution(cfg.with_seed(derive_seed(cfg.seed, 1))),
                            random_involution(cfg.with_seed(derive_seed(cfg.seed, 2))),
                            random_involution(cfg.with_seed(derive_seed(cfg.seed, 3))));
}

std::vector<ProductComponent> random_separable_components(const SampleConfig &cfg,
                                                          std::size_t components,
                                                          std::optional<std::size_t> second_dim) {
    cfg.validate();
    if (components == 0) {
        throw Error(ErrorCode::ConfigInvalid, "a separable mixture needs at least one component");
    }
    SampleConfig second = cfg;
    second.dim = second_dim.value_or(cfg.dim);
    second.rank.reset();
    second.validate();

    Rng rng(derive_seed(cfg.seed, 0));
    std::vector<double> w(components);
    double total = 0.0;
    for (auto &x : w) {
        x = -std::log(rng.uniform());
        total += x;
    }
    std::vector<ProductComponent> out;
    out.reserve(components);
    for (std::size_t k = 0; k < components; ++k) {
        out.push_back({w[k] / total, haar_pure(cfg.with_seed(derive_seed(cfg.seed, 2 * k + 1))),
                       haar_pure(second.with_seed(derive_seed(cfg.seed, 2 * k + 2)))});
    }
    return out;
}

QuantumState mixture_density(std::span<const ProductComponent> components) {
    if (components.empty()) {
        throw Error(ErrorCode::WeightInvalid, "empty mixture");
    }
    double total = 0.0;
    for (const auto &c : components) {
        if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) {
            throw Error(ErrorCode::WeightInvalid, "mixture weight " + std::to_string(c.weight));
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kValidationTol) {
        throw Error(ErrorCode::WeightInvalid, "mixture weights sum to " + std::to_string(total));
    }
    const std::size_t d1 = components.front().mu.dim();
    const std::size_t d2 = components.front().nu.dim();
    ComplexMatrix rho(d1 * d2);
    for (const auto &c : components) {
        if (c.mu.dim() != d1 || c.nu.dim() != d2) {
            throw Error(ErrorCode::DimensionMismatch, "mixture components have differing dimensions");
        }
        rho += kron(c.mu.density(), c.nu.density()) * Complex(c.weight);
    }
    rho *= Complex(1.0 / rho.trace().real());
    return QuantumState::mixed(std::move(rho));
}

QuantumState random_separable(const SampleConfig &cfg, std::size_t components) {
    const auto parts = random_separable_components(cfg, components);
    if (components == 1) return product_state(parts.front().mu, parts.front().nu);
    return mixture_density(parts);
}

}  // namespace tripleunc
