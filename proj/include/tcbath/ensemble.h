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


#ifndef TCBATH_ENSEMBLE_H
#define TCBATH_ENSEMBLE_H

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "tcbath/dynamics.h"

namespace tcbath {

/// Worker count from TCBATH_WORKERS, else the hardware concurrency (>= 1).
int worker_count();

/// Evaluates f(0..n-1) on up to `workers` threads. Results are stored by
/// index, so the output never depends on scheduling. The first exception
/// thrown by any task is rethrown after all workers join.
template <typename R>
std::vector<R> parallel_map(int n, const std::function<R(int)>& f, int workers = worker_count()) {
    std::vector<R> out(n);
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    int w = std::max(1, std::min(workers, n));
    std::vector<std::thread> threads;
    for (int i = 1; i < w; i++) {
        threads.emplace_back(work);
    }
    work();
    for (auto& th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

struct LifetimeSummary {
    std::vector<Trajectory> runs;
    /// Median of the end times; censored runs enter at their horizon, which
    /// leaves the median exact while fewer than half are censored.
    double median_lifetime = 0.0;
    int censored = 0;

    bool median_reliable() const {
        return 2 * censored < static_cast<int>(runs.size());
    }
};

/// Trajectory i uses seed derive_seed(master_seed, i).
LifetimeSummary run_lifetime_ensemble(const CodeLattice& lattice, const InteractionKernel& kernel,
                                      const ModelParams& params, const LifetimeOptions& options, int size,
                                      uint64_t master_seed, int workers = worker_count());

struct EscapeSummary {
    std::vector<EscapeSample> runs;
    double median_time = 0.0;
    int censored = 0;

    bool median_reliable() const {
        return 2 * censored < static_cast<int>(runs.size());
    }
};

EscapeSummary run_hindering_ensemble(const CodeLattice& lattice, const InteractionKernel& kernel,
                                     const CouplingPattern& pattern, const ModelParams& params,
                                     const std::vector<std::pair<int, int>>& seeded_pairs,
                                     const HinderOptions& options, int size, uint64_t master_seed,
                                     int workers = worker_count());

}  // namespace tcbath

#endif
