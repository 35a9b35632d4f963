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
#include <string>

#include "tripleunc/observable_algebra.hpp"
#include "tripleunc/state.hpp"

namespace tripleunc {

/// Signs of (<s1>, <s2>, <s3>) for one of the eight tilted qubit states.
class SignPattern {
   public:
    /// Each entry must be +1 or -1; throws InvalidArgument otherwise.
    SignPattern(int s1, int s2, int s3);
    explicit SignPattern(std::array<int, 3> s) : SignPattern(s[0], s[1], s[2]) {}

    /// The eight patterns in table order: +++, ++-, +-+, -++, +--, -+-, --+, ---.
    static const std::array<SignPattern, 8> &all();

    int operator[](std::size_t j) const { return s_.at(j); }
    const std::array<int, 3> &signs() const noexcept { return s_; }
    /// 1-based position in all().
    int case_number() const;
    /// "+-+" style label.
    std::string label() const;

    friend bool operator==(const SignPattern &, const SignPattern &) = default;

   private:
    std::array<int, 3> s_;
};

/// Pure qubit state with <s_j> = p_j / sqrt(3).
///
/// Amplitudes are sqrt(1/2 +- sqrt(3)/6) with relative phase
/// +-e^{+-i pi/4}; the larger amplitude sits on |0> exactly when p_3 = +1.
QuantumState appendix_state(const SignPattern &p);

struct SaturatingPartner {
    QuantumState nu;
    SignPattern pattern;
    /// sum_j <i[H_j, H_{j+1}]>_mu <s_{j+2}>_nu
    double achieved;
    /// -(1/sqrt 3) sum_j |<[H_j, H_{j+1}]>_mu|
    double target;
};

/// Picks nu among the eight sign-pattern states so that every term
/// <i[H_j, H_{j+1}]>_mu <s_{j+2}>_nu is non-positive, which makes the sum
/// reach its lower bound. A coefficient within 1e-12 of zero selects +1.
SaturatingPartner saturating_partner(const ObservableTriple &t, const QuantumState &mu);

}  // namespace tripleunc
