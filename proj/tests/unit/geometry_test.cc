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


#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "tcbath/decoder.h"
#include "tcbath/error.h"
#include "tcbath/lattice.h"

namespace tcbath {
namespace {

TEST(CodeLattice, RejectsOddAndSmallSizes) {
    EXPECT_THROW(CodeLattice(0), SizeError);
    EXPECT_THROW(CodeLattice(-2), SizeError);
    EXPECT_THROW(CodeLattice(3), SizeError);
    EXPECT_NO_THROW(CodeLattice(2));
}

TEST(CodeLattice, CountsForL2) {
    CodeLattice lat(2);
    EXPECT_EQ(lat.num_stabilizers(), 8);
    EXPECT_EQ(lat.num_spins(), 8);
    std::vector<int> e(lat.num_spins(), 0), m(lat.num_spins(), 0);
    for (int q = 0; q < lat.num_stabilizers(); q++) {
        for (int spin : lat.stabilizer(q).spins) {
            (lat.species_of(q) == Species::kE ? e : m)[spin]++;
        }
    }
    for (int s = 0; s < lat.num_spins(); s++) {
        EXPECT_EQ(e[s], 2);
        EXPECT_EQ(m[s], 2);
    }
}

TEST(CodeLattice, EachSpinInTwoStabilizersOfEachSpecies) {
    for (int L : {4, 6, 8}) {
        CodeLattice lat(L);
        for (int spin = 0; spin < lat.num_spins(); spin++) {
            for (Species s : kAllSpecies) {
                auto pair = lat.toggled_by(spin, s);
                EXPECT_NE(pair[0], pair[1]);
                for (int q : pair) {
                    EXPECT_EQ(lat.species_of(q), s);
                    const auto& spins = lat.stabilizer(q).spins;
                    EXPECT_EQ(std::count(spins.begin(), spins.end(), spin), 1);
                }
            }
        }
    }
}

TEST(CodeLattice, FourDistinctSpinsPerStabilizer) {
    CodeLattice lat(6);
    for (int q = 0; q < lat.num_stabilizers(); q++) {
        const auto& spins = lat.stabilizer(q).spins;
        EXPECT_EQ(std::set<int>(spins.begin(), spins.end()).size(), 4u);
    }
}

TEST(CodeLattice, StabilizerProductCoversSpinsEvenly) {
    CodeLattice lat(6);
    for (Species s : kAllSpecies) {
        std::vector<int> cover(lat.num_spins(), 0);
        for (int q = 0; q < lat.num_stabilizers(); q++) {
            if (lat.species_of(q) == s) {
                for (int spin : lat.stabilizer(q).spins) {
                    cover[spin]++;
                }
            }
        }
        for (int c : cover) {
            EXPECT_EQ(c % 2, 0);
        }
    }
}

TEST(CodeLattice, PositionsAreIntegerAndHalfOffset) {
    CodeLattice lat(4);
    for (int q = 0; q < lat.num_stabilizers(); q++) {
        const auto& s = lat.stabilizer(q);
        double off = s.species == Species::kE ? 0.0 : 0.5;
        EXPECT_DOUBLE_EQ(s.pos.x, s.col + off);
        EXPECT_DOUBLE_EQ(s.pos.y, s.row + off);
    }
}

TEST(CodeLattice, LogicalRepsHaveWeightL) {
    CodeLattice lat(4);
    for (int c = 0; c < kNumLogicalClasses; c++) {
        const auto& rep = lat.logical(static_cast<LogicalClass>(c));
        EXPECT_EQ(rep.size(), 4u);
        EXPECT_EQ(std::set<int>(rep.begin(), rep.end()).size(), 4u);
    }
}

// Parity of species-s flips incident to each stabilizer, computed from the
// stabilizer supports rather than the toggle table.
std::vector<int> syndrome_by_support(const CodeLattice& lat, const std::vector<int>& spins, Species s) {
    std::vector<int> out;
    std::set<int> flipped(spins.begin(), spins.end());
    for (int q = 0; q < lat.num_stabilizers(); q++) {
        if (lat.species_of(q) != s) {
            continue;
        }
        int parity = 0;
        for (int spin : lat.stabilizer(q).spins) {
            parity ^= flipped.count(spin) ? 1 : 0;
        }
        if (parity) {
            out.push_back(q);
        }
    }
    return out;
}

TEST(CodeLattice, LogicalRepsCommuteWithStabilizersL16) {
    CodeLattice lat(16);
    EXPECT_TRUE(syndrome_by_support(lat, lat.logical(LogicalClass::kEX), Species::kE).empty());
    EXPECT_TRUE(syndrome_by_support(lat, lat.logical(LogicalClass::kEY), Species::kE).empty());
    EXPECT_TRUE(syndrome_by_support(lat, lat.logical(LogicalClass::kMX), Species::kM).empty());
    EXPECT_TRUE(syndrome_by_support(lat, lat.logical(LogicalClass::kMY), Species::kM).empty());
}

TEST(CodeLattice, JsonExport) {
    CodeLattice lat(4);
    auto j = lat.to_json();
    EXPECT_EQ(j["L"], 4);
    EXPECT_EQ(j["stabilizers"].size(), 32u);
    EXPECT_EQ(j["logical_reps"].size(), 4u);
    EXPECT_EQ(j["stabilizers"][20]["species"], "m");
}

TEST(Distances, PlanarExamples) {
    CodeLattice lat(8);
    int s00 = lat.stabilizer_index(Species::kE, 0, 0);
    int s34 = lat.stabilizer_index(Species::kE, 3, 4);
    int p00 = lat.stabilizer_index(Species::kM, 0, 0);
    EXPECT_DOUBLE_EQ(planar_distance(lat, s00, s00), 0.0);
    EXPECT_DOUBLE_EQ(planar_distance(lat, s00, s34), 5.0);
    EXPECT_NEAR(planar_distance(lat, s00, p00), std::sqrt(0.5), 1e-15);
}

TEST(Distances, PlanarTriangleInequality) {
    CodeLattice lat(8);
    std::mt19937 gen(3);
    std::uniform_int_distribution<int> pick(0, lat.num_stabilizers() - 1);
    for (int k = 0; k < 500; k++) {
        int a = pick(gen), b = pick(gen), c = pick(gen);
        EXPECT_LE(planar_distance(lat, a, c), planar_distance(lat, a, b) + planar_distance(lat, b, c) + 1e-12);
        EXPECT_DOUBLE_EQ(planar_distance(lat, a, b), planar_distance(lat, b, a));
    }
}

TEST(Distances, ToroidalExamples) {
    CodeLattice lat(8);
    int s00 = lat.stabilizer_index(Species::kE, 0, 0);
    EXPECT_DOUBLE_EQ(toroidal_distance(lat, s00, lat.stabilizer_index(Species::kE, 7, 0)), 1.0);
    EXPECT_DOUBLE_EQ(toroidal_distance(lat, s00, lat.stabilizer_index(Species::kE, 4, 0)), 4.0);
}

TEST(Distances, ToroidalMatchesImageEnumeration) {
    CodeLattice lat(6);
    std::mt19937 gen(5);
    std::uniform_int_distribution<int> pick(0, lat.num_stabilizers() - 1);
    for (int k = 0; k < 300; k++) {
        int a = pick(gen), b = pick(gen);
        auto pa = lat.stabilizer(a).pos;
        auto pb = lat.stabilizer(b).pos;
        double best = 1e300;
        for (int ix = -1; ix <= 1; ix++) {
            for (int iy = -1; iy <= 1; iy++) {
                best = std::min(best, std::hypot(pa.x - pb.x + 6 * ix, pa.y - pb.y + 6 * iy));
            }
        }
        EXPECT_NEAR(toroidal_distance(lat, a, b), best, 1e-12);
    }
}

TEST(Distances, PathLengthIsManhattanOnTorus) {
    CodeLattice lat(8);
    int a = lat.stabilizer_index(Species::kM, 1, 1);
    EXPECT_EQ(toroidal_path_length(lat, a, lat.stabilizer_index(Species::kM, 7, 3)), 4);
    EXPECT_EQ(toroidal_path_length(lat, a, lat.stabilizer_index(Species::kM, 5, 5)), 8);
}

TEST(BathLattice, EmbeddingIsScaledIsometry) {
    CodeLattice lat(4);
    BathLattice bath(lat, 8);
    std::set<int> used;
    for (int a = 0; a < lat.num_stabilizers(); a++) {
        const auto& s = bath.site_of(a);
        for (int k = 0; k < 3; k++) {
            EXPECT_GE(s[k], 0);
            EXPECT_LT(s[k], 8);
        }
        EXPECT_EQ(s[2], 4);
        used.insert(bath.linear_index(s));
        for (int b = 0; b < lat.num_stabilizers(); b++) {
            EXPECT_NEAR(bath.distance(a, b), std::sqrt(2.0) * planar_distance(lat, a, b), 1e-12);
        }
    }
    EXPECT_EQ(used.size(), 32u);
}

TEST(BathLattice, RejectsTooSmallCube) {
    CodeLattice lat(8);
    EXPECT_THROW(BathLattice(lat, 15), SizeError);
    EXPECT_NO_THROW(BathLattice(lat, 16));
}

}  // namespace
}  // namespace tcbath
