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

#ifndef TCBATH_LATTICE_H
#define TCBATH_LATTICE_H

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace tcbath {

/// Anyon species. `kE` anyons live on s-stabilizers (integer sites), `kM`
/// anyons on p-stabilizers (sites offset by (1/2, 1/2)). A Pauli flip of
/// species X toggles the two species-X stabilizers incident to the spin.
enum class Species : uint8_t { kE = 0, kM = 1 };

constexpr std::array<Species, 2> kAllSpecies = {Species::kE, Species::kM};

inline constexpr int index_of(Species s) {
    return static_cast<int>(s);
}
std::string_view species_name(Species s);
Species parse_species(std::string_view name);

/// Homology class of a logical representative. The name gives the species of
/// the chain and the torus direction it winds.
enum class LogicalClass : uint8_t { kEX = 0, kEY = 1, kMX = 2, kMY = 3 };
constexpr int kNumLogicalClasses = 4;
std::string_view logical_class_name(LogicalClass c);

struct Point2 {
    double x;
    double y;
};

struct StabilizerInfo {
    Species species;
    int col;
    int row;
    /// Position in lattice-constant units; p-stabilizers are offset by (1/2, 1/2).
    Point2 pos;
    std::array<int, 4> spins;
};

/// Toric code on an L x L torus with spins on edges.
///
/// Spin indices: horizontal edge h(i, j) = j*L + i joins s(i, j) and s(i+1, j);
/// vertical edge v(i, j) = L^2 + j*L + i joins s(i, j) and s(i, j+1).
/// Stabilizer indices: s(i, j) = j*L + i, p(i, j) = L^2 + j*L + i.
class CodeLattice {
   public:
    /// Throws SizeError unless L >= 2 and L is even.
    explicit CodeLattice(int L);

    int size() const {
        return L_;
    }
    int num_spins() const {
        return 2 * L_ * L_;
    }
    int num_stabilizers() const {
        return 2 * L_ * L_;
    }

    const StabilizerInfo& stabilizer(int q) const {
        return stabilizers_[q];
    }
    Species species_of(int q) const {
        return stabilizers_[q].species;
    }
    int stabilizer_index(Species s, int col, int row) const;
    int horizontal_spin(int col, int row) const;
    int vertical_spin(int col, int row) const;
    bool is_horizontal(int spin) const {
        return spin < L_ * L_;
    }

    /// The two stabilizers of `s` that contain `spin`.
    const std::array<int, 2>& toggled_by(int spin, Species s) const {
        return toggles_[2 * spin + index_of(s)];
    }

    const std::vector<int>& logical(LogicalClass c) const {
        return logicals_[static_cast<int>(c)];
    }

    /// The s-stabilizer nearest the geometric center of the patch.
    int center_stabilizer() const {
        return stabilizer_index(Species::kE, L_ / 2, L_ / 2);
    }
    /// Stabilizer s(0, 0), a corner of the planar patch.
    int corner_stabilizer() const {
        return 0;
    }

    /// Positions doubled to integers: s(i, j) -> (2i, 2j), p(i, j) -> (2i+1, 2j+1).
    std::array<int, 2> doubled_position(int q) const;

    nlohmann::json to_json() const;

   private:
    int L_;
    std::vector<StabilizerInfo> stabilizers_;
    std::vector<std::array<int, 2>> toggles_;
    std::array<std::vector<int>, kNumLogicalClasses> logicals_;
};

/// Euclidean distance between stabilizer positions in the plane (no wraparound).
double planar_distance(const CodeLattice& lattice, int a, int b);

/// Minimum-image Euclidean distance on the L-periodic torus.
double toroidal_distance(const CodeLattice& lattice, int a, int b);

/// Number of single-spin moves separating two same-species stabilizers on the
/// torus (minimum-image Manhattan distance). This is the weight of a shortest
/// correction path.
int toroidal_path_length(const CodeLattice& lattice, int a, int b);

/// Cubic boson lattice of side Lambda hosting the code in its z = Lambda/2
/// plane. The density-2 stabilizer lattice is mapped isometrically (up to a
/// factor sqrt(2)) onto bath sites by (x, y) -> (x + y, y - x), so s-stabilizers
/// occupy even-parity and p-stabilizers odd-parity sites. Bath distances are
/// therefore sqrt(2) times planar distances.
class BathLattice {
   public:
    /// Throws SizeError unless the embedded patch fits inside the cube
    /// (Lambda >= 2L).
    BathLattice(const CodeLattice& lattice, int Lambda);

    int side() const {
        return Lambda_;
    }
    int num_sites() const {
        return Lambda_ * Lambda_ * Lambda_;
    }
    const std::array<int, 3>& site_of(int q) const {
        return sites_[q];
    }
    int linear_index(const std::array<int, 3>& site) const;
    const std::vector<std::array<int, 3>>& sites() const {
        return sites_;
    }

    /// Euclidean distance between embedded stabilizers, in bath lattice units.
    double distance(int a, int b) const;

   private:
    int Lambda_;
    std::vector<std::array<int, 3>> sites_;
};

}  // namespace tcbath

#endif
