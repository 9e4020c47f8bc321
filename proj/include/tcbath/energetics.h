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


#ifndef TCBATH_ENERGETICS_H
#define TCBATH_ENERGETICS_H

#include <array>
#include <cstdint>
#include <vector>

#include "tcbath/couplings.h"
#include "tcbath/lattice.h"

namespace tcbath {

/// One Pauli process: flip `spin` in the channel that toggles the two
/// `species` stabilizers containing it.
struct Flip {
    int spin;
    Species species;

    bool operator==(const Flip&) const = default;
};

/// Anyon occupations n_p in {0, 1} for all 2L^2 stabilizers. Keeps a dense
/// list of occupied sites so that field sums cost O(#anyons).
class AnyonConfig {
   public:
    explicit AnyonConfig(const CodeLattice& lattice);
    AnyonConfig(const CodeLattice& lattice, const std::vector<int>& occupied);

    int num_stabilizers() const {
        return static_cast<int>(n_.size());
    }
    bool occupied(int q) const {
        return n_[q] != 0;
    }
    void toggle(int q);
    void apply(const CodeLattice& lattice, Flip flip);

    int count(Species s) const {
        return counts_[index_of(s)];
    }
    int total() const {
        return static_cast<int>(list_.size());
    }
    /// Occupied stabilizers in insertion order (unspecified after removals).
    const std::vector<int>& occupied_list() const {
        return list_;
    }
    /// Occupied stabilizers of one species, ascending.
    std::vector<int> sorted_occupied(Species s) const;

    bool operator==(const AnyonConfig& other) const {
        return n_ == other.n_;
    }

   private:
    int half_;
    std::vector<uint8_t> n_;
    std::vector<int> slot_;
    std::vector<int> list_;
    std::array<int, 2> counts_{0, 0};
};

/// E = sum_p mu_p n_p + 4 sum_{p != p'} J_pp' n_p n_p' (ordered pairs), vacuum = 0.
double config_energy(const AnyonConfig& config, const InteractionKernel& kernel);

/// Exact energy change of toggling q1 and q2 (q1 != q2), in O(#anyons).
double toggle_pair_delta(const AnyonConfig& config, int q1, int q2, const InteractionKernel& kernel);

double move_delta(const AnyonConfig& config, const CodeLattice& lattice, Flip flip, const InteractionKernel& kernel);

/// Pair-creation cost at the center used by the mean-field theory:
/// 2 mu_center - A^2 / (4 pi t).
double pair_creation_cost(const CodeLattice& lattice, const InteractionKernel& kernel, const ModelParams& params);

}  // namespace tcbath

#endif
