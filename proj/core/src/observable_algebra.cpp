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

#include "tripleunc/observable_algebra.hpp"

#include <algorithm>
#include <string>

#include "tripleunc/error.hpp"

namespace tripleunc {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

const PauliSet &PauliSet::get() {
    static const PauliSet set{{
        Observable(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}),
        Observable(ComplexMatrix{{0.0, -kI}, {kI, 0.0}}),
        Observable(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}),
    }};
    return set;
}

ObservableTriple::ObservableTriple(Observable h1, Observable h2, Observable h3)
    : ObservableTriple(std::array<Observable, 3>{std::move(h1), std::move(h2), std::move(h3)}) {}

ObservableTriple::ObservableTriple(std::array<Observable, 3> h) : h_(std::move(h)) {
    if (h_[1].dim() != h_[0].dim() || h_[2].dim() != h_[0].dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "observable triple dimensions differ: " + std::to_string(h_[0].dim()) + ", " +
                        std::to_string(h_[1].dim()) + ", " + std::to_string(h_[2].dim()));
    }
}

ObservableTriple ObservableTriple::paulis() {
    const auto &p = PauliSet::get();
    return ObservableTriple(p[0], p[1], p[2]);
}

ComplexMatrix ObservableTriple::commutator_at(std::size_t j) const {
    return commutator(h_.at(j).matrix(), h_[cyclic(j, 1)].matrix());
}

Observable ObservableTriple::hermitian_commutator_at(std::size_t j) const {
    return Observable(kI * commutator_at(j));
}

Observable build_r(const ObservableTriple &t) {
    const auto &pauli = PauliSet::get();
    ComplexMatrix r(2 * t.dim());
    for (std::size_t j = 0; j < 3; ++j) r += kron(t[j].matrix(), pauli[j].matrix());
    return Observable(std::move(r));
}

Observable r_squared_expansion(const ObservableTriple &t) {
    const auto &pauli = PauliSet::get();
    const auto id2 = ComplexMatrix::identity(2);
    ComplexMatrix out(2 * t.dim());
    for (std::size_t j = 0; j < 3; ++j) {
        const auto &h = t[j].matrix();
        out += kron(h * h, id2);
        out += kron(t.commutator_at(j), kI * pauli[cyclic(j, 2)].matrix());
    }
    return Observable(std::move(out));
}

double AnticommutationProfile::max_residual() const {
    double m = 0.0;
    for (const auto &row : residual) m = std::max(m, *std::max_element(row.begin(), row.end()));
    return m;
}

AnticommutationProfile anticommutation_profile(const ObservableTriple &t) {
    const std::array<ComplexMatrix, 3> c{t.commutator_at(0), t.commutator_at(1), t.commutator_at(2)};
    AnticommutationProfile p;
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = j + 1; k < 3; ++k) {
            const double r = anticommutator(c[j], c[k]).frobenius_norm();
            p.residual[j][k] = r;
            p.residual[k][j] = r;
        }
    }
    return p;
}

double involution_defect(const ObservableTriple &t) {
    const auto id = ComplexMatrix::identity(t.dim());
    double worst = 0.0;
    for (const auto &h : t.members()) {
        worst = std::max(worst, max_abs_diff(h.matrix() * h.matrix(), id));
    }
    return worst;
}

}  // namespace tripleunc
