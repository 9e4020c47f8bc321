// Copyright 2026 The tcbath Authors
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


#ifndef TCBATH_RUN_CONFIG_H
#define TCBATH_RUN_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tcbath/couplings.h"
#include "tcbath/lattice.h"

namespace tcbath {

constexpr std::string_view kVersion = "0.1.0";

/// Process exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;
constexpr int kExitSoftware = 70;
constexpr int kExitOutput = 73;

struct PatternSpec {
    std::string kind = "uniform";  // uniform | square
    /// Amplitudes for the square pattern; the uniform pattern uses params.A.
    double A_s = 1.0;
    double A_w = 1.0;

    bool operator==(const PatternSpec&) const = default;
};

struct RunConfig {
    std::string experiment;
    ModelParams params;
    PatternSpec pattern;
    int ensemble = 1;
    double horizon = 1e6;
    long max_events = 50'000'000;
    std::optional<uint64_t> seed;
    std::string out = ".";
    int stride = 1;
    double tolerance = 1e-13;
    /// Experiment-specific knobs (scan lists, oracle settings), echoed as given.
    nlohmann::json options = nlohmann::json::object();

    bool operator==(const RunConfig&) const = default;
};

const std::vector<std::string>& experiment_names();
bool is_stochastic(std::string_view experiment);

/// Parses a config document. Unknown keys and ill-typed values throw
/// ConfigError; out-of-range values throw ParameterError or SizeError.
RunConfig parse_run_config(const nlohmann::json& doc);
RunConfig load_run_config(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

/// Builds the coupling pattern named by the config.
CouplingPattern make_pattern(const CodeLattice& lattice, const RunConfig& config);

/// Parameter and pattern checks run before any computation.
void validate(const RunConfig& config);

}  // namespace tcbath

#endif
