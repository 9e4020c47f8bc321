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


#ifndef TCBATH_DYNAMICS_H
#define TCBATH_DYNAMICS_H

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "tcbath/couplings.h"
#include "tcbath/decoder.h"
#include "tcbath/energetics.h"
#include "tcbath/lattice.h"
#include "tcbath/rng.h"

namespace tcbath {

struct RateLaw {
    RateLawKind kind = RateLawKind::kGlauber;
    double gamma0 = 1.0;

    /// glauber gamma0 / (1 + e^{b dE}); metropolis gamma0 min(1, e^{-b dE});
    /// symmetric-exponential gamma0 e^{-b dE / 2}.
    double rate(double delta_e, double beta) const;
};

/// Thrown by KmcEngine::step when every rate has underflowed to zero, so the
/// state can never change (for example beta -> infinity).
struct FrozenState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Event {
    double time = 0.0;
    int spin = -1;
    Species species = Species::kE;
    double delta_e = 0.0;

    bool operator==(const Event&) const = default;
};

/// Continuous-time KMC over all 4L^2 single-spin Pauli processes. Process
/// index = 2 * spin + index_of(species).
///
/// Keeps the field h_q = sum_{occupied p != q} J_qp, so each process cost is
/// O(1) and an event updates the fields in O(L^2).
class KmcEngine {
   public:
    KmcEngine(const CodeLattice& lattice, const InteractionKernel& kernel, RateLaw law, double beta, uint64_t seed);

    /// Replace the state (anyons must match the error's syndrome). Resets the
    /// clock and the cumulative energy.
    void reset(const ErrorSet& error);

    /// Restrict dynamics to processes whose mask entry is nonzero.
    void set_process_mask(std::vector<uint8_t> mask);

    int num_processes() const {
        return 2 * lattice_.num_spins();
    }
    Flip process(int index) const {
        return {index / 2, index % 2 == 0 ? Species::kE : Species::kM};
    }
    double process_delta(int index) const;
    /// Rate of every process in the current state (masked ones are zero).
    std::vector<double> process_rates() const;

    /// One Gillespie step. Throws FrozenState if the total rate is zero and
    /// std::runtime_error if it is not finite.
    Event step();

    double time() const {
        return time_;
    }
    const AnyonConfig& config() const {
        return config_;
    }
    const ErrorSet& error() const {
        return error_;
    }
    /// Sum of event Delta E since the last reset.
    double cumulative_delta() const {
        return cumulative_;
    }
    double field(int q) const {
        return field_[q];
    }
    const CodeLattice& lattice() const {
        return lattice_;
    }

   private:
    void toggle_site(int q);

    const CodeLattice& lattice_;
    const InteractionKernel& kernel_;
    RateLaw law_;
    double beta_;
    Rng rng_;
    AnyonConfig config_;
    ErrorSet error_;
    std::vector<double> field_;
    std::vector<uint8_t> mask_;
    std::vector<double> rates_;
    double time_ = 0.0;
    double cumulative_ = 0.0;
};

enum class Termination { kLogicalFailure, kHorizon, kEventCap, kFailure };

std::string_view termination_name(Termination t);

struct CountSample {
    double time;
    int e_count;
    int m_count;
};

struct Trajectory {
    uint64_t seed = 0;
    std::vector<Event> events;
    std::vector<CountSample> samples;
    Termination termination = Termination::kHorizon;
    double end_time = 0.0;
    long num_events = 0;
    double cumulative_delta = 0.0;
    double final_energy = 0.0;
    LogicalFailure failure;
    std::string message;

    bool censored() const {
        return termination != Termination::kLogicalFailure;
    }
};

using DecoderHook = std::function<Correction(const Syndrome&, const CodeLattice&)>;

/// Minimum-weight matching with default options.
DecoderHook default_decoder();

struct LifetimeOptions {
    double horizon = 1e6;
    long max_events = 50'000'000;
    int decode_stride = 1;
    bool record_events = false;
    bool record_samples = false;
};

/// Evolves from the vacuum until the decoder's correction combined with the
/// accumulated error is logically nontrivial, or until the horizon.
Trajectory run_lifetime(const CodeLattice& lattice, const InteractionKernel& kernel, const ModelParams& params,
                        const DecoderHook& decoder, const LifetimeOptions& options, uint64_t seed);

enum class EscapeReason { kNewWeakRegion, kStrayed, kHorizon, kEventCap };

std::string_view escape_reason_name(EscapeReason r);

struct EscapeSample {
    uint64_t seed = 0;
    double time = 0.0;
    long num_events = 0;
    EscapeReason reason = EscapeReason::kHorizon;

    bool censored() const {
        return reason == EscapeReason::kHorizon || reason == EscapeReason::kEventCap;
    }
};

struct HinderOptions {
    double horizon = 1e6;
    long max_events = 10'000'000;
};

/// Seeds anyon pairs (same species, joined by a shortest correction path) and
/// runs until an anyon occupies a weak stabilizer outside every seeded weak
/// region, or lies farther than L/4 (toroidal) from every seed site.
EscapeSample run_hindering(const CodeLattice& lattice, const InteractionKernel& kernel, const CouplingPattern& pattern,
                           const ModelParams& params, const std::vector<std::pair<int, int>>& seeded_pairs,
                           const HinderOptions& options, uint64_t seed);

/// Seeds the pairs and reports whether an anyon first reaches a weak
/// stabilizer that was initially empty (true) or strays farther than L/4 from
/// every seed site (false). Censored runs count as false.
bool run_relaxation(const CodeLattice& lattice, const InteractionKernel& kernel, const CouplingPattern& pattern,
                    const ModelParams& params, const std::vector<std::pair<int, int>>& seeded_pairs,
                    const HinderOptions& options, uint64_t seed);

/// Error set joining each seeded pair by its correction path.
ErrorSet seed_pairs(const CodeLattice& lattice, const std::vector<std::pair<int, int>>& pairs);

}  // namespace tcbath

#endif
