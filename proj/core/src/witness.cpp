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

#include "tripleunc/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "tripleunc/error.hpp"
#include "tripleunc/product_search.hpp"
#include "tripleunc/uncertainty.hpp"

namespace tripleunc {

double separable_expectation_bound() { return std::sqrt(3.0 + 2.0 * std::numbers::sqrt3); }

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::Entangled ? "Entangled" : "Inconclusive";
}

std::string_view to_string(WitnessMethod m) noexcept {
    return m == WitnessMethod::ExpectationThreshold ? "ExpectationThreshold" : "VarianceFloor";
}

namespace {

void require_composite(const ObservableTriple &t, const QuantumState &rho) {
    if (rho.dim() != 2 * t.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state dim " + std::to_string(rho.dim()) +
                                                      " vs composite dim " +
                                                      std::to_string(2 * t.dim()));
    }
}

WitnessReport moments(const Observable &r, const QuantumState &rho) {
    WitnessReport out;
    const double mean = expectation(r, rho);
    out.expectation_abs = std::abs(mean);
    out.second_moment = expectation(r.matrix() * r.matrix(), rho).real();
    out.variance = variance(r, rho);
    return out;
}

}  // namespace

WitnessReport expectation_witness(const ObservableTriple &t, const QuantumState &rho) {
    const double defect = involution_defect(t);
    if (defect > kEqualityTol) {
        throw Error(ErrorCode::InvolutionRequired,
                    "expectation witness needs H_j^2 = I; defect " + std::to_string(defect));
    }
    require_composite(t, rho);
    WitnessReport out = moments(build_r(t), rho);
    out.method = WitnessMethod::ExpectationThreshold;
    out.involutive = true;
    out.threshold_used = separable_expectation_bound();
    if (out.second_moment > kInvolutiveSecondMomentBound + kEqualityTol ||
        out.expectation_abs > kInvolutiveExpectationBound + kEqualityTol) {
        throw Error(ErrorCode::InternalConsistency,
                    "involutive bound exceeded: Tr rho R^2 = " + std::to_string(out.second_moment) +
                        ", |Tr rho R| = " + std::to_string(out.expectation_abs));
    }
    out.verdict = out.expectation_abs > out.threshold_used + kVerdictMargin ? Verdict::Entangled
                                                                             : Verdict::Inconclusive;
    return out;
}

std::uint64_t triple_fingerprint(const ObservableTriple &t) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
        for (int b = 0; b < 8; ++b) {
            h ^= (word >> (8 * b)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(t.dim());
    for (const auto &obs : t.members()) {
        for (const auto &z : obs.matrix().entries()) {
            // + 0.0 folds -0.0 into +0.0
            mix(std::bit_cast<std::uint64_t>(z.real() + 0.0));
            mix(std::bit_cast<std::uint64_t>(z.imag() + 0.0));
        }
    }
    return h;
}

void FloorConfig::validate() const {
    if (restarts < 1) throw Error(ErrorCode::ConfigInvalid, "restarts must be >= 1");
    if (max_iterations < 1) throw Error(ErrorCode::ConfigInvalid, "max_iterations must be >= 1");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::ConfigInvalid, "tolerance must be positive");
    if (!(grid_step > 0.0 && grid_step <= std::numbers::pi / 60.0 + 1e-15)) {
        throw Error(ErrorCode::ConfigInvalid, "grid step must lie in (0, pi/60]");
    }
}

FloorEstimate estimate_variance_floor(const ObservableTriple &t, const FloorConfig &cfg) {
    cfg.validate();
    if (cfg.grid_check && t.dim() != 2) {
        throw Error(ErrorCode::ConfigInvalid, "grid check is only available for qubit triples");
    }
    const ProductVarianceModel model(t);
    const std::size_t d = t.dim();
    const std::size_t n_mu = angle_count(d);
    auto objective = [&model](std::span<const double> x) { return model.variance_at(x); };
    const LocalSearchOptions opts{cfg.max_iterations, cfg.tolerance, 1e-6};

    std::optional<LocalSearchResult> best;
    std::vector<double> finals;
    for (int r = 0; r < cfg.restarts; ++r) {
        const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
        const auto mu0 = haar_pure(SampleConfig{derive_seed(seed, 1), d, {}, 1.0});
        const auto nu0 = haar_pure(SampleConfig{derive_seed(seed, 2), 2, {}, 1.0});
        std::vector<double> x0 = angles_from_amplitudes(mu0.amplitudes());
        const auto nu_angles = angles_from_amplitudes(nu0.amplitudes());
        x0.insert(x0.end(), nu_angles.begin(), nu_angles.end());
        auto res = minimize_bfgs(objective, std::move(x0), opts);
        finals.push_back(res.value);
        if (!best || res.value < best->value) best = std::move(res);
    }

    const std::span<const double> x(best->x);
    auto mu = QuantumState::pure_normalized(amplitudes_from_angles(x.subspan(0, n_mu), d));
    auto nu = QuantumState::pure_normalized(amplitudes_from_angles(x.subspan(n_mu, 2), 2));
    const Observable r = build_r(t);
    double c = variance(r, product_state(mu, nu));

    // Converged: the winning local search met its tolerance and, with more than
    // one restart, some other restart reproduced its value to 1e-9.
    const auto agreeing = std::count_if(finals.begin(), finals.end(),
                                        [&](double v) { return v <= best->value + 1e-9; });
    const bool converged = best->converged && (cfg.restarts == 1 || agreeing >= 2);

    FloorEstimate out{c, std::move(mu), std::move(nu), cfg.restarts, converged,
                      triple_fingerprint(t), std::nullopt};
    if (cfg.grid_check) {
        auto grid = bloch_grid_minimum(t, cfg.grid_step);
        out.grid_value = grid.value;
        const double grid_c = variance(r, product_state(grid.mu, grid.nu));
        if (grid_c < out.c) {
            out.c = grid_c;
            out.argmin_mu = std::move(grid.mu);
            out.argmin_nu = std::move(grid.nu);
        }
    }
    return out;
}

WitnessReport variance_witness(const ObservableTriple &t, const QuantumState &rho,
                               const FloorEstimate &floor) {
    if (floor.fingerprint != triple_fingerprint(t)) {
        throw Error(ErrorCode::FloorMismatch, "variance floor was estimated for a different triple");
    }
    require_composite(t, rho);
    WitnessReport out = moments(build_r(t), rho);
    out.method = WitnessMethod::VarianceFloor;
    out.involutive = involution_defect(t) <= kEqualityTol;
    out.threshold_used = floor.c;
    out.verdict =
        out.variance < floor.c - kVerdictMargin ? Verdict::Entangled : Verdict::Inconclusive;
    return out;
}

MixtureAudit separable_mixture_audit(std::span<const ProductComponent> components,
                                     const ObservableTriple &t) {
    for (const auto &c : components) {
        if (c.mu.dim() != t.dim() || c.nu.dim() != 2) {
            throw Error(ErrorCode::DimensionMismatch,
                        "mixture component is not a (d, qubit) product for this triple");
        }
    }
    const QuantumState rho = mixture_density(components);
    const Observable r = build_r(t);
    MixtureAudit out{variance(r, rho), 0.0};
    for (const auto &c : components) out.rhs += c.weight * variance(r, product_state(c.mu, c.nu));
    return out;
}

}  // namespace tripleunc
