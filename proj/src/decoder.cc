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


#include "tcbath/decoder.h"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "tcbath/error.h"

namespace tcbath {

ErrorSet::ErrorSet(const CodeLattice& lattice) {
    flips[0].assign(lattice.num_spins(), 0);
    flips[1].assign(lattice.num_spins(), 0);
}

ErrorSet& ErrorSet::operator^=(const ErrorSet& other) {
    for (int s = 0; s < 2; s++) {
        for (size_t i = 0; i < flips[s].size(); i++) {
            flips[s][i] ^= other.flips[s][i];
        }
    }
    return *this;
}

int ErrorSet::weight() const {
    int w = 0;
    for (const auto& f : flips) {
        for (uint8_t b : f) {
            w += b;
        }
    }
    return w;
}

Syndrome extract_syndrome(const ErrorSet& error, const CodeLattice& lattice) {
    std::vector<uint8_t> odd(lattice.num_stabilizers(), 0);
    for (Species s : kAllSpecies) {
        const auto& f = error.flips[index_of(s)];
        for (int spin = 0; spin < lattice.num_spins(); spin++) {
            if (f[spin]) {
                for (int q : lattice.toggled_by(spin, s)) {
                    odd[q] ^= 1;
                }
            }
        }
    }
    Syndrome out;
    for (int q = 0; q < lattice.num_stabilizers(); q++) {
        if (odd[q]) {
            out.anyons[index_of(lattice.species_of(q))].push_back(q);
        }
    }
    return out;
}

int matching_weight(const std::vector<int>& anyons, const Matching& m, const CodeLattice& lattice) {
    int w = 0;
    for (auto [i, j] : m) {
        w += toroidal_path_length(lattice, anyons[i], anyons[j]);
    }
    return w;
}

Matching exact_matching(const std::vector<int>& anyons, const CodeLattice& lattice) {
    const int n = static_cast<int>(anyons.size());
    if (n % 2 != 0) {
        throw InvariantError("odd number of anyons cannot be matched");
    }
    if (n > 20) {
        throw ParameterError("exact matching limited to 20 anyons");
    }
    // Order by stabilizer index so the first-free-element recursion enumerates
    // pairings lexicographically.
    std::vector<int> order(n);
    for (int i = 0; i < n; i++) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return anyons[a] < anyons[b]; });
    std::vector<std::vector<int>> w(n, std::vector<int>(n));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            w[i][j] = toroidal_path_length(lattice, anyons[order[i]], anyons[order[j]]);
        }
    }
    const int full = (1 << n) - 1;
    constexpr int kUnset = std::numeric_limits<int>::max();
    std::vector<int> best(1 << n, kUnset);
    best[full] = 0;
    // best[mask] = min weight to match the anyons not in mask.
    for (int mask = full - 1; mask >= 0; mask--) {
        int free = __builtin_popcount(static_cast<unsigned>(~mask & full));
        if (free % 2 != 0) {
            continue;
        }
        int i = __builtin_ctz(static_cast<unsigned>(~mask & full));
        int b = kUnset;
        for (int j = i + 1; j < n; j++) {
            if (mask & (1 << j)) {
                continue;
            }
            int rest = best[mask | (1 << i) | (1 << j)];
            if (rest != kUnset) {
                b = std::min(b, w[i][j] + rest);
            }
        }
        best[mask] = b;
    }
    Matching out;
    int mask = 0;
    while (mask != full) {
        int i = __builtin_ctz(static_cast<unsigned>(~mask & full));
        for (int j = i + 1; j < n; j++) {
            if (mask & (1 << j)) {
                continue;
            }
            int next = mask | (1 << i) | (1 << j);
            if (best[next] != kUnset && w[i][j] + best[next] == best[mask]) {
                out.emplace_back(order[i], order[j]);
                mask = next;
                break;
            }
        }
    }
    return out;
}

Matching greedy_matching(const std::vector<int>& anyons, const CodeLattice& lattice) {
    const int n = static_cast<int>(anyons.size());
    if (n % 2 != 0) {
        throw InvariantError("odd number of anyons cannot be matched");
    }
    // (weight, smaller stabilizer, larger stabilizer, i, j)
    std::vector<std::tuple<int, int, int, int, int>> edges;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            edges.emplace_back(toroidal_path_length(lattice, anyons[i], anyons[j]), std::min(anyons[i], anyons[j]),
                               std::max(anyons[i], anyons[j]), i, j);
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<bool> used(n, false);
    Matching out;
    for (const auto& [wt, lo, hi, i, j] : edges) {
        if (!used[i] && !used[j]) {
            used[i] = used[j] = true;
            out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<int> correction_path(int a, int b, const CodeLattice& lattice) {
    const int L = lattice.size();
    const auto& sa = lattice.stabilizer(a);
    const auto& sb = lattice.stabilizer(b);
    if (sa.species != sb.species) {
        throw ParameterError("correction path endpoints must share a species");
    }
    const bool e = sa.species == Species::kE;
    std::vector<int> path;
    int col = sa.col;
    int row = sa.row;
    int dx = ((sb.col - sa.col) % L + L) % L;
    int step_x = dx <= L / 2 ? 1 : -1;
    int nx = dx <= L / 2 ? dx : L - dx;
    for (int k = 0; k < nx; k++) {
        if (e) {
            path.push_back(lattice.horizontal_spin(step_x > 0 ? col : col - 1, row));
        } else {
            path.push_back(lattice.vertical_spin(step_x > 0 ? col + 1 : col, row));
        }
        col += step_x;
    }
    int dy = ((sb.row - sa.row) % L + L) % L;
    int step_y = dy <= L / 2 ? 1 : -1;
    int ny = dy <= L / 2 ? dy : L - dy;
    for (int k = 0; k < ny; k++) {
        if (e) {
            path.push_back(lattice.vertical_spin(col, step_y > 0 ? row : row - 1));
        } else {
            path.push_back(lattice.horizontal_spin(col, step_y > 0 ? row + 1 : row));
        }
        row += step_y;
    }
    return path;
}

Correction decode(const Syndrome& syndrome, const CodeLattice& lattice, const DecoderOptions& options) {
    Correction c(lattice);
    for (Species s : kAllSpecies) {
        const auto& anyons = syndrome.of(s);
        if (anyons.size() % 2 != 0) {
            throw InvariantError("odd syndrome for species " + std::string(species_name(s)));
        }
        Matching m = static_cast<int>(anyons.size()) <= options.exact_limit ? exact_matching(anyons, lattice)
                                                                             : greedy_matching(anyons, lattice);
        for (auto [i, j] : m) {
            for (int spin : correction_path(anyons[i], anyons[j], lattice)) {
                c.toggle(spin, s);
            }
        }
    }
    return c;
}

LogicalFailure is_logical_failure(const ErrorSet& error, const Correction& correction, const CodeLattice& lattice) {
    ErrorSet residual = error;
    residual ^= correction;
    if (!extract_syndrome(residual, lattice).empty()) {
        throw InvariantError("residual error has a nonempty syndrome");
    }
    auto parity = [&](Species s, LogicalClass rep) {
        int count = 0;
        for (int spin : lattice.logical(rep)) {
            count += residual.has(spin, s);
        }
        return count % 2 == 1;
    };
    LogicalFailure out;
    out.classes[static_cast<int>(LogicalClass::kEX)] = parity(Species::kE, LogicalClass::kMY);
    out.classes[static_cast<int>(LogicalClass::kEY)] = parity(Species::kE, LogicalClass::kMX);
    out.classes[static_cast<int>(LogicalClass::kMX)] = parity(Species::kM, LogicalClass::kEY);
    out.classes[static_cast<int>(LogicalClass::kMY)] = parity(Species::kM, LogicalClass::kEX);
    return out;
}

}  // namespace tcbath
