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


#include "tcbath/ensemble.h"

#include <cstdlib>
#include <string>

#include "tcbath/error.h"
#include "tcbath/stats.h"

namespace tcbath {

int worker_count() {
    if (const char* env = std::getenv("TCBATH_WORKERS"); env && *env) {
        try {
            int n = std::stoi(env);
            if (n >= 1) {
                return n;
            }
        } catch (const std::exception&) {
        }
        throw ParameterError("TCBATH_WORKERS must be a positive integer, got '" + std::string(env) + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

LifetimeSummary run_lifetime_ensemble(const CodeLattice& lattice, const InteractionKernel& kernel,
                                      const ModelParams& params, const LifetimeOptions& options, int size,
                                      uint64_t master_seed, int workers) {
    if (size < 1) {
        throw ParameterError("ensemble size must be >= 1");
    }
    auto decoder = default_decoder();
    LifetimeSummary summary;
    summary.runs = parallel_map<Trajectory>(
        size,
        [&](int i) {
            return run_lifetime(lattice, kernel, params, decoder, options, derive_seed(master_seed, i));
        },
        workers);
    std::vector<double> times;
    for (const auto& r : summary.runs) {
        times.push_back(r.end_time);
        summary.censored += r.censored();
    }
    summary.median_lifetime = median(times);
    return summary;
}

EscapeSummary run_hindering_ensemble(const CodeLattice& lattice, const InteractionKernel& kernel,
                                     const CouplingPattern& pattern, const ModelParams& params,
                                     const std::vector<std::pair<int, int>>& seeded_pairs,
                                     const HinderOptions& options, int size, uint64_t master_seed, int workers) {
    if (size < 1) {
        throw ParameterError("ensemble size must be >= 1");
    }
    EscapeSummary summary;
    summary.runs = parallel_map<EscapeSample>(
        size,
        [&](int i) {
            return run_hindering(lattice, kernel, pattern, params, seeded_pairs, options,
                                 derive_seed(master_seed, i));
        },
        workers);
    std::vector<double> times;
    for (const auto& r : summary.runs) {
        times.push_back(r.time);
        summary.censored += r.censored();
    }
    summary.median_time = median(times);
    return summary;
}

}  // namespace tcbath
