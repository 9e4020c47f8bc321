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


#ifndef TCBATH_DECODER_H
#define TCBATH_DECODER_H

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tcbath/lattice.h"

namespace tcbath {

/// Spin flips per channel. `flips[index_of(s)][spin]` is set when the spin
/// carries an odd number of species-s flips.
struct ErrorSet {
    std::array<std::vector<uint8_t>, 2> flips;

    explicit ErrorSet(const CodeLattice& lattice);
    ErrorSet() = default;

    void toggle(int spin, Species s) {
        flips[index_of(s)][spin] ^= 1;
    }
    bool has(int spin, Species s) const {
        return flips[index_of(s)][spin] != 0;
    }
    /// Symmetric difference.
    ErrorSet& operator^=(const ErrorSet& other);
    int weight() const;

    bool operator==(const ErrorSet&) const = default;
};

using Correction = ErrorSet;

struct Syndrome {
    std::array<std::vector<int>, 2> anyons;  // ascending stabilizer indices

    const std::vector<int>& of(Species s) const {
        return anyons[index_of(s)];
    }
    bool empty() const {
        return anyons[0].empty() && anyons[1].empty();
    }
    bool operator==(const Syndrome&) const = default;
};

Syndrome extract_syndrome(const ErrorSet& error, const CodeLattice& lattice);

/// A perfect matching as index pairs into the anyon list.
using Matching = std::vector<std::pair<int, int>>;

/// Sum of toroidal_path_length over the matched pairs.
int matching_weight(const std::vector<int>& anyons, const Matching& m, const CodeLattice& lattice);

/// Exact minimum-weight perfect matching by exhaustive search. Among equal
/// weights the lexicographically smallest pairing (sorted pairs of stabilizer
/// indices) wins.
Matching exact_matching(const std::vector<int>& anyons, const CodeLattice& lattice);

/// Repeatedly pairs the globally closest remaining anyons (ties by index).
Matching greedy_matching(const std::vector<int>& anyons, const CodeLattice& lattice);

struct DecoderOptions {
    int exact_limit = 10;  // exact matching up to this many anyons per species
};

/// Spins on an L-shaped shortest toroidal path from stabilizer a to b
/// (same species): first along the column index, then along the row index.
std::vector<int> correction_path(int a, int b, const CodeLattice& lattice);

/// Throws InvariantError on an odd syndrome.
Correction decode(const Syndrome& syndrome, const CodeLattice& lattice, const DecoderOptions& options = {});

/// Failure flag per logical class; index with static_cast<int>(LogicalClass).
struct LogicalFailure {
    std::array<bool, kNumLogicalClasses> classes{};

    bool any() const {
        return classes[0] || classes[1] || classes[2] || classes[3];
    }
    int count() const {
        return classes[0] + classes[1] + classes[2] + classes[3];
    }
    bool operator[](LogicalClass c) const {
        return classes[static_cast<int>(c)];
    }
};

/// Homology class of error xor correction. An e-chain winding in x crosses the
/// m_y representative an odd number of times (and so on). Throws
/// InvariantError if the residual has a nonempty syndrome.
LogicalFailure is_logical_failure(const ErrorSet& error, const Correction& correction, const CodeLattice& lattice);

}  // namespace tcbath

#endif
