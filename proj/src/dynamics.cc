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


#include "tcbath/dynamics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "tcbath/error.h"

namespace tcbath {

double RateLaw::rate(double delta_e, double beta) const {
    double x = beta * delta_e;
    switch (kind) {
        case RateLawKind::kGlauber:
            if (x > 0) {
                double e = std::exp(-x);
                return gamma0 * e / (1.0 + e);
            }
            return gamma0 / (1.0 + std::exp(x));
        case RateLawKind::kMetropolis:
            return x <= 0 ? gamma0 : gamma0 * std::exp(-x);
        case RateLawKind::kSymmetricExponential:
            return gamma0 * std::exp(-0.5 * x);
    }
    return 0.0;
}

KmcEngine::KmcEngine(const CodeLattice& lattice, const InteractionKernel& kernel, RateLaw law, double beta,
                     uint64_t seed)
    : lattice_(lattice),
      kernel_(kernel),
      law_(law),
      beta_(beta),
      rng_(seed),
      config_(lattice),
      error_(lattice),
      field_(lattice.num_stabilizers(), 0.0),
      mask_(2 * lattice.num_spins(), 1),
      rates_(2 * lattice.num_spins(), 0.0) {
    if (kernel.num_stabilizers() != lattice.num_stabilizers()) {
        throw ParameterError("kernel does not match the lattice");
    }
    if (!(beta > 0) || !(law.gamma0 > 0)) {
        throw ParameterError("beta and gamma0 must be positive");
    }
}

void KmcEngine::reset(const ErrorSet& error) {
    config_ = AnyonConfig(lattice_);
    std::fill(field_.begin(), field_.end(), 0.0);
    auto syndrome = extract_syndrome(error, lattice_);
    for (Species s : kAllSpecies) {
        for (int q : syndrome.of(s)) {
            toggle_site(q);
        }
    }
    error_ = error;
    time_ = 0.0;
    cumulative_ = 0.0;
}

void KmcEngine::set_process_mask(std::vector<uint8_t> mask) {
    if (static_cast<int>(mask.size()) != num_processes()) {
        throw ParameterError("process mask has the wrong length");
    }
    mask_ = std::move(mask);
}

void KmcEngine::toggle_site(int q) {
    double s = config_.occupied(q) ? -1.0 : 1.0;
    const int n = lattice_.num_stabilizers();
    for (int p = 0; p < n; p++) {
        if (p != q) {
            field_[p] += s * kernel_.pair(p, q);
        }
    }
    config_.toggle(q);
}

double KmcEngine::process_delta(int index) const {
    Flip f = process(index);
    const auto& pair = lattice_.toggled_by(f.spin, f.species);
    int q1 = pair[0];
    int q2 = pair[1];
    double n1 = config_.occupied(q1) ? 1.0 : 0.0;
    double n2 = config_.occupied(q2) ? 1.0 : 0.0;
    double j12 = kernel_.pair(q1, q2);
    double h1 = field_[q1] - n2 * j12;
    double h2 = field_[q2] - n1 * j12;
    double s1 = 1.0 - 2.0 * n1;
    double s2 = 1.0 - 2.0 * n2;
    double pair_change = (1.0 - n1) * (1.0 - n2) - n1 * n2;
    return s1 * (kernel_.mu(q1) + 8.0 * h1) + s2 * (kernel_.mu(q2) + 8.0 * h2) + 8.0 * j12 * pair_change;
}

std::vector<double> KmcEngine::process_rates() const {
    std::vector<double> out(num_processes(), 0.0);
    for (int i = 0; i < num_processes(); i++) {
        if (mask_[i]) {
            out[i] = law_.rate(process_delta(i), beta_);
        }
    }
    return out;
}

Event KmcEngine::step() {
    const int n = num_processes();
    double total = 0.0;
    for (int i = 0; i < n; i++) {
        rates_[i] = mask_[i] ? law_.rate(process_delta(i), beta_) : 0.0;
        total += rates_[i];
    }
    if (total == 0.0) {
        throw FrozenState("all KMC rates vanish");
    }
    if (!(total > 0) || !std::isfinite(total)) {
        throw std::runtime_error("total KMC rate is not finite (" + std::to_string(total) + ")");
    }
    time_ += rng_.exponential(total);
    double target = rng_.uniform() * total;
    int chosen = -1;
    double acc = 0.0;
    for (int i = 0; i < n; i++) {
        if (rates_[i] <= 0) {
            continue;
        }
        chosen = i;
        acc += rates_[i];
        if (target < acc) {
            break;
        }
    }
    Flip f = process(chosen);
    double delta = process_delta(chosen);
    const auto& pair = lattice_.toggled_by(f.spin, f.species);
    toggle_site(pair[0]);
    toggle_site(pair[1]);
    error_.toggle(f.spin, f.species);
    cumulative_ += delta;
    return {time_, f.spin, f.species, delta};
}

std::string_view termination_name(Termination t) {
    switch (t) {
        case Termination::kLogicalFailure:
            return "logical-failure";
        case Termination::kHorizon:
            return "horizon";
        case Termination::kEventCap:
            return "event-cap";
        case Termination::kFailure:
            return "failure";
    }
    return "?";
}

std::string_view escape_reason_name(EscapeReason r) {
    switch (r) {
        case EscapeReason::kNewWeakRegion:
            return "new-weak-region";
        case EscapeReason::kStrayed:
            return "strayed";
        case EscapeReason::kHorizon:
            return "horizon";
        case EscapeReason::kEventCap:
            return "event-cap";
    }
    return "?";
}

DecoderHook default_decoder() {
    return [](const Syndrome& s, const CodeLattice& lattice) { return decode(s, lattice); };
}

Trajectory run_lifetime(const CodeLattice& lattice, const InteractionKernel& kernel, const ModelParams& params,
                        const DecoderHook& decoder, const LifetimeOptions& options, uint64_t seed) {
    if (!(options.horizon > 0)) {
        throw ParameterError("horizon must be positive");
    }
    if (options.decode_stride < 1) {
        throw ParameterError("decode stride must be >= 1");
    }
    KmcEngine engine(lattice, kernel, {params.rate_law, params.gamma0}, params.beta, seed);
    Trajectory traj;
    traj.seed = seed;
    auto sample = [&](double time) {
        if (options.record_samples) {
            traj.samples.push_back({time, engine.config().count(Species::kE), engine.config().count(Species::kM)});
        }
    };
    sample(0.0);
    traj.termination = Termination::kHorizon;
    traj.end_time = options.horizon;
    try {
        while (true) {
            if (traj.num_events >= options.max_events) {
                traj.termination = Termination::kEventCap;
                traj.end_time = engine.time();
                break;
            }
            Event ev;
            try {
                ev = engine.step();
            } catch (const FrozenState&) {
                break;
            }
            if (ev.time > options.horizon) {
                break;
            }
            traj.num_events++;
            if (options.record_events) {
                traj.events.push_back(ev);
            }
            sample(ev.time);
            if (traj.num_events % options.decode_stride != 0) {
                continue;
            }
            Syndrome syndrome;
            for (Species s : kAllSpecies) {
                syndrome.anyons[index_of(s)] = engine.config().sorted_occupied(s);
            }
            Correction c = decoder(syndrome, lattice);
            LogicalFailure lf = is_logical_failure(engine.error(), c, lattice);
            if (lf.any()) {
                traj.termination = Termination::kLogicalFailure;
                traj.failure = lf;
                traj.end_time = ev.time;
                break;
            }
        }
    } catch (const std::runtime_error& e) {
        traj.termination = Termination::kFailure;
        traj.end_time = engine.time();
        traj.message = e.what();
    }
    traj.cumulative_delta = engine.cumulative_delta();
    traj.final_energy = config_energy(engine.config(), kernel);
    return traj;
}

ErrorSet seed_pairs(const CodeLattice& lattice, const std::vector<std::pair<int, int>>& pairs) {
    ErrorSet error(lattice);
    for (auto [a, b] : pairs) {
        if (a == b) {
            throw ParameterError("a seeded pair needs two distinct stabilizers");
        }
        Species s = lattice.species_of(a);
        for (int spin : correction_path(a, b, lattice)) {
            error.toggle(spin, s);
        }
    }
    return error;
}

namespace {

enum class Outcome { kNone, kNewWeak, kStrayed };

struct SeedGeometry {
    std::vector<int> region;
    std::set<int> seeded_regions;
    std::vector<int> seed_sites;
    std::vector<uint8_t> initially_occupied;
};

SeedGeometry seed_geometry(const CodeLattice& lattice, const CouplingPattern& pattern,
                           const std::vector<std::pair<int, int>>& pairs) {
    SeedGeometry g;
    g.region = weak_regions(lattice, pattern);
    g.initially_occupied.assign(lattice.num_stabilizers(), 0);
    for (auto [a, b] : pairs) {
        for (int q : {a, b}) {
            g.seed_sites.push_back(q);
            g.initially_occupied[q] = 1;
            if (g.region[q] >= 0) {
                g.seeded_regions.insert(g.region[q]);
            }
        }
    }
    return g;
}

bool strayed(const CodeLattice& lattice, const SeedGeometry& g, int q) {
    double limit = lattice.size() / 4.0;
    for (int s : g.seed_sites) {
        if (toroidal_distance(lattice, q, s) <= limit + 1e-12) {
            return false;
        }
    }
    return true;
}

template <typename Check>
EscapeSample run_until(const CodeLattice& lattice, const InteractionKernel& kernel, const ModelParams& params,
                       const std::vector<std::pair<int, int>>& pairs, const HinderOptions& options, uint64_t seed,
                       Check check) {
    if (!(options.horizon > 0)) {
        throw ParameterError("horizon must be positive");
    }
    KmcEngine engine(lattice, kernel, {params.rate_law, params.gamma0}, params.beta, seed);
    engine.reset(seed_pairs(lattice, pairs));
    EscapeSample out;
    out.seed = seed;
    out.reason = EscapeReason::kHorizon;
    out.time = options.horizon;
    while (true) {
        if (out.num_events >= options.max_events) {
            out.reason = EscapeReason::kEventCap;
            out.time = engine.time();
            break;
        }
        Event ev;
        try {
            ev = engine.step();
        } catch (const FrozenState&) {
            break;
        }
        if (ev.time > options.horizon) {
            break;
        }
        out.num_events++;
        Outcome o = check(engine.config());
        if (o != Outcome::kNone) {
            out.reason = o == Outcome::kNewWeak ? EscapeReason::kNewWeakRegion : EscapeReason::kStrayed;
            out.time = ev.time;
            break;
        }
    }
    return out;
}

void check_seeds(const CodeLattice& lattice, const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) {
        throw ParameterError("at least one seeded pair is required");
    }
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= lattice.num_stabilizers() || b >= lattice.num_stabilizers()) {
            throw ParameterError("seeded stabilizer out of range");
        }
        if (lattice.species_of(a) != lattice.species_of(b)) {
            throw ParameterError("a seeded pair must share a species");
        }
    }
}

}  // namespace

EscapeSample run_hindering(const CodeLattice& lattice, const InteractionKernel& kernel, const CouplingPattern& pattern,
                           const ModelParams& params, const std::vector<std::pair<int, int>>& seeded_pairs,
                           const HinderOptions& options, uint64_t seed) {
    check_seeds(lattice, seeded_pairs);
    SeedGeometry g = seed_geometry(lattice, pattern, seeded_pairs);
    for (int q : g.seed_sites) {
        if (g.region[q] < 0) {
            throw ParameterError("hindering seeds must sit on weak stabilizers");
        }
    }
    return run_until(lattice, kernel, params, seeded_pairs, options, seed, [&](const AnyonConfig& config) {
        for (int q : config.occupied_list()) {
            if (g.region[q] >= 0 && !g.seeded_regions.count(g.region[q])) {
                return Outcome::kNewWeak;
            }
            if (strayed(lattice, g, q)) {
                return Outcome::kStrayed;
            }
        }
        return Outcome::kNone;
    });
}

bool run_relaxation(const CodeLattice& lattice, const InteractionKernel& kernel, const CouplingPattern& pattern,
                    const ModelParams& params, const std::vector<std::pair<int, int>>& seeded_pairs,
                    const HinderOptions& options, uint64_t seed) {
    check_seeds(lattice, seeded_pairs);
    SeedGeometry g = seed_geometry(lattice, pattern, seeded_pairs);
    auto sample = run_until(lattice, kernel, params, seeded_pairs, options, seed, [&](const AnyonConfig& config) {
        for (int q : config.occupied_list()) {
            if (g.region[q] >= 0 && !g.initially_occupied[q]) {
                return Outcome::kNewWeak;
            }
            if (strayed(lattice, g, q)) {
                return Outcome::kStrayed;
            }
        }
        return Outcome::kNone;
    });
    return sample.reason == EscapeReason::kNewWeakRegion;
}

}  // namespace tcbath
