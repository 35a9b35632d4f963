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
#include <string>
#include <vector>

#include "tripleunc_cli/io.hpp"

namespace tripleunc::cli {

/// Process exit codes; scripts may branch on these.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailures = 1,
    kExitInputError = 2,
    kExitEntangled = 3,
};

/// Overrides the default seed of every command when --seed is absent.
inline constexpr const char *kSeedEnvVar = "TRIPLEUNC_SEED";

/// The explicit value if present, else $TRIPLEUNC_SEED, else 1.
/// Throws InputError on an unparsable environment value.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed);

struct VerifyOptions {
    std::size_t dim = 2;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string suite = "all";
    std::string format = "json";
};

struct WitnessOptions {
    std::filesystem::path triple;
    std::filesystem::path state;
    std::string method = "expectation";
    std::optional<std::filesystem::path> floor;
};

struct FloorOptions {
    std::filesystem::path triple;
    FloorConfig config;
};

/// A finished command: the serialized report plus the process exit code.
struct CommandOutput {
    int exit_code;
    std::string text;
};

/// Suites run by `verify`, in report order.
const std::vector<std::string> &verify_suites();

/// Builds the verify report. `wall_time_s` is the only nondeterministic field.
Json verify_report(const VerifyOptions &opts);
CommandOutput run_verify(const VerifyOptions &opts);
CommandOutput run_witness(const WitnessOptions &opts);
Json floor_report(const FloorOptions &opts);
CommandOutput run_floor(const FloorOptions &opts);
Json example_report();
CommandOutput run_example();

/// Copy of `report` with the timing field removed, for determinism checks.
Json without_timing(Json report);

/// Entry point shared by main() and the tests. Never throws.
int run_cli(const std::vector<std::string> &args);

}  // namespace tripleunc::cli
