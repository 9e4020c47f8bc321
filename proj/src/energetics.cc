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


#include "tcbath/energetics.h"

#include <algorithm>
#include <numbers>

#include "tcbath/error.h"

namespace tcbath {

AnyonConfig::AnyonConfig(const CodeLattice& lattice)
    : half_(lattice.size() * lattice.size()), n_(lattice.num_stabilizers(), 0), slot_(lattice.num_stabilizers(), -1) {
}

AnyonConfig::AnyonConfig(const CodeLattice& lattice, const std::vector<int>& occupied) : AnyonConfig(lattice) {
    for (int q : occupied) {
        if (q < 0 || q >= num_stabilizers()) {
            throw ParameterError("stabilizer index out of range: " + std::to_string(q));
        }
        if (n_[q]) {
            throw ParameterError("stabilizer listed twice: " + std::to_string(q));
        }
        toggle(q);
    }
}

void AnyonConfig::toggle(int q) {
    int species = q < half_ ? 0 : 1;
    if (n_[q]) {
        int s = slot_[q];
        int last = list_.back();
        list_[s] = last;
        slot_[last] = s;
        list_.pop_back();
        slot_[q] = -1;
        n_[q] = 0;
        counts_[species]--;
    } else {
        slot_[q] = static_cast<int>(list_.size());
        list_.push_back(q);
        n_[q] = 1;
        counts_[species]++;
    }
}

void AnyonConfig::apply(const CodeLattice& lattice, Flip flip) {
    const auto& pair = lattice.toggled_by(flip.spin, flip.species);
    toggle(pair[0]);
    toggle(pair[1]);
}

std::vector<int> AnyonConfig::sorted_occupied(Species s) const {
    std::vector<int> out;
    for (int q : list_) {
        if ((q < half_) == (s == Species::kE)) {
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double config_energy(const AnyonConfig& config, const InteractionKernel& kernel) {
    const auto& occ = config.occupied_list();
    double e = 0.0;
    for (size_t i = 0; i < occ.size(); i++) {
        e += kernel.mu(occ[i]);
        for (size_t j = i + 1; j < occ.size(); j++) {
            e += 8.0 * kernel.pair(occ[i], occ[j]);
        }
    }
    return e;
}

double toggle_pair_delta(const AnyonConfig& config, int q1, int q2, const InteractionKernel& kernel) {
    double s1 = config.occupied(q1) ? -1.0 : 1.0;
    double s2 = config.occupied(q2) ? -1.0 : 1.0;
    double f1 = 0.0;
    double f2 = 0.0;
    for (int p : config.occupied_list()) {
        if (p == q1 || p == q2) {
            continue;
        }
        f1 += kernel.pair(q1, p);
        f2 += kernel.pair(q2, p);
    }
    double n1 = config.occupied(q1) ? 1.0 : 0.0;
    double n2 = config.occupied(q2) ? 1.0 : 0.0;
    double pair_change = (1.0 - n1) * (1.0 - n2) - n1 * n2;
    return s1 * (kernel.mu(q1) + 8.0 * f1) + s2 * (kernel.mu(q2) + 8.0 * f2) + 8.0 * kernel.pair(q1, q2) * pair_change;
}

double move_delta(const AnyonConfig& config, const CodeLattice& lattice, Flip flip, const InteractionKernel& kernel) {
    const auto& pair = lattice.toggled_by(flip.spin, flip.species);
    return toggle_pair_delta(config, pair[0], pair[1], kernel);
}

double pair_creation_cost(const CodeLattice& lattice, const InteractionKernel& kernel, const ModelParams& params) {
    return 2.0 * kernel.mu(lattice.center_stabilizer()) - params.A * params.A / (4.0 * std::numbers::pi * params.t);
}

}  // namespace tcbath
