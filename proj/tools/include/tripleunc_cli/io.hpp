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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tripleunc/observable_algebra.hpp"
#include "tripleunc/state.hpp"
#include "tripleunc/witness.hpp"

namespace tripleunc::cli {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input document. The message names the file and the
/// offending line (syntax errors) or field path (schema errors).
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

Json read_document(const std::filesystem::path &path);
/// Parses text; `origin` labels diagnostics.
Json parse_document(std::string_view text, std::string_view origin);

/// Serializes with every floating-point value at 17 significant digits.
std::string dump(const Json &doc, int indent = 2);

/// Writes `text` to `path`, or to stdout when no path is given.
void emit(const std::string &text, const std::optional<std::filesystem::path> &path);

// Documents are {"dim", "kind", "entries"} with complex numbers as [re, im].
//   kind "matrix": entries = dim rows of dim complex numbers
//   kind "pure":   entries = dim complex numbers
//   kind "mixed":  entries = density matrix rows
//   kind "triple": entries = three matrices (each as rows)
//   kind "floor":  a serialized FloorEstimate
Json matrix_to_json(const ComplexMatrix &m);
Json state_to_json(const QuantumState &s);
Json triple_to_json(const ObservableTriple &t);
Json floor_to_json(const FloorEstimate &f);

// `field` is the JSONPath-style location of `doc`, used in diagnostics ("$" at
// the document root).
ComplexMatrix matrix_from_json(const Json &doc, const std::string &field);
QuantumState state_from_json(const Json &doc, const std::string &field);
ObservableTriple triple_from_json(const Json &doc, const std::string &field);
FloorEstimate floor_from_json(const Json &doc, const std::string &field);

ObservableTriple load_triple(const std::filesystem::path &path);
QuantumState load_state(const std::filesystem::path &path);
FloorEstimate load_floor(const std::filesystem::path &path);

std::string fingerprint_hex(std::uint64_t fp);

}  // namespace tripleunc::cli
