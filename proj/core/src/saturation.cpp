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

#include "tripleunc/saturation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tripleunc/error.hpp"

namespace tripleunc {

namespace {

constexpr double kTieBreak = 1e-12;

// One row of the state table: which amplitude is large and the phase on |1>.
struct TableRow {
    std::array<int, 3> signs;
    bool large_on_zero;
    int phase_sign;     // overall +-1 in front of the |1> term
    int exponent_sign;  // sign of i*pi/4 in the exponential
};

constexpr std::array<TableRow, 8> kTable{{
    {{+1, +1, +1}, true, +1, +1},
    {{+1, +1, -1}, false, +1, +1},
    {{+1, -1, +1}, true, +1, -1},
    {{-1, +1, +1}, true, -1, -1},
    {{+1, -1, -1}, false, +1, -1},
    {{-1, +1, -1}, false, -1, -1},
    {{-1, -1, +1}, true, -1, +1},
    {{-1, -1, -1}, false, -1, +1},
}};

}  // namespace

SignPattern::SignPattern(int s1, int s2, int s3) : s_{s1, s2, s3} {
    for (int s : s_) {
        if (s != 1 && s != -1) {
            throw Error(ErrorCode::InvalidArgument, "sign pattern entries must be +1 or -1");
        }
    }
}

const std::array<SignPattern, 8> &SignPattern::all() {
    static const std::array<SignPattern, 8> patterns{
        SignPattern(kTable[0].signs), SignPattern(kTable[1].signs), SignPattern(kTable[2].signs),
        SignPattern(kTable[3].signs), SignPattern(kTable[4].signs), SignPattern(kTable[5].signs),
        SignPattern(kTable[6].signs), SignPattern(kTable[7].signs)};
    return patterns;
}

int SignPattern::case_number() const {
    for (std::size_t k = 0; k < kTable.size(); ++k) {
        if (kTable[k].signs == s_) return static_cast<int>(k) + 1;
    }
    return 0;  // unreachable for a validated pattern
}

std::string SignPattern::label() const {
    std::string out;
    for (int s : s_) out.push_back(s > 0 ? '+' : '-');
    return out;
}

QuantumState appendix_state(const SignPattern &p) {
    const TableRow &row = kTable.at(static_cast<std::size_t>(p.case_number() - 1));
    const double large = std::sqrt(0.5 + std::numbers::sqrt3 / 6.0);
    const double small = std::sqrt(0.5 - std::numbers::sqrt3 / 6.0);
    const Complex phase = static_cast<double>(row.phase_sign) *
                          std::polar(1.0, row.exponent_sign * std::numbers::pi / 4.0);
    const double a0 = row.large_on_zero ? large : small;
    const double a1 = row.large_on_zero ? small : large;
    return QuantumState::pure_normalized({Complex(a0), phase * a1});
}

SaturatingPartner saturating_partner(const ObservableTriple &t, const QuantumState &mu) {
    if (mu.dim() != t.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "mu dim " + std::to_string(mu.dim()) +
                                                      " vs triple dim " + std::to_string(t.dim()));
    }
    std::array<double, 3> coeff{};
    std::array<int, 3> signs{};
    double moduli = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
        const Complex c = expectation(t.commutator_at(j), mu);
        // <i[H_j, H_{j+1}]> = -Im <[H_j, H_{j+1}]>
        coeff[j] = -c.imag();
        moduli += std::abs(c);
        signs[cyclic(j, 2)] = coeff[j] > kTieBreak ? -1 : +1;
    }
    const SignPattern pattern(signs);
    QuantumState nu = appendix_state(pattern);
    const auto bloch = bloch_vector(nu);
    double achieved = 0.0;
    for (std::size_t j = 0; j < 3; ++j) achieved += coeff[j] * bloch[cyclic(j, 2)];
    return {std::move(nu), pattern, achieved, -moduli / std::numbers::sqrt3};
}

}  // namespace tripleunc
