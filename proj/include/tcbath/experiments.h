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


#ifndef TCBATH_EXPERIMENTS_H
#define TCBATH_EXPERIMENTS_H

#include <string>
#include <vector>

#include "json.hpp"
#include "tcbath/run_config.h"

namespace tcbath {

struct ExperimentResult {
    std::vector<std::string> files;  // paths written
    nlohmann::json summary;
};

/// Validates the config and dispatches to the named experiment. Every output
/// file starts with a header recording the version, the full config and the
/// seed: '#' comment lines for CSV, a "header" object for JSON.
ExperimentResult run_experiment(const RunConfig& config);

/// Default seeded pair for the hindering experiment: e anyons at s(1, 1) and
/// s(L/2, L/2), in two different weak blocks of the square pattern.
std::vector<std::pair<int, int>> default_hinder_seeds(const CodeLattice& lattice);

/// Mean chemical potential over the strong stabilizers of a pattern.
double mean_strong_mu(const InteractionKernel& kernel, const CouplingPattern& pattern);

}  // namespace tcbath

#endif
