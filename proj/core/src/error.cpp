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

#include "tripleunc/error.hpp"

namespace tripleunc {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::DegenerateVariance: return "DegenerateVariance";
        case ErrorCode::InvolutionRequired: return "InvolutionRequired";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::FloorMismatch: return "FloorMismatch";
        case ErrorCode::WeightInvalid: return "WeightInvalid";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InternalConsistency: return "InternalConsistency";
    }
    return "Unknown";
}

}  // namespace tripleunc
