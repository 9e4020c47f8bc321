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

#include <algorithm>
#include <functional>
#include <random>

#include "tcbath/decoder.h"
#include "tcbath/error.h"

namespace tcbath {
namespace {

// Minimum over every perfect pairing, by recursion on the first unmatched anyon.
int brute_min_weight(const std::vector<int>& anyons, const CodeLattice& lat) {
    std::vector<bool> used(anyons.size(), false);
    std::function<int()> rec = [&]() -> int {
        size_t i = 0;
        while (i < anyons.size() && used[i]) {
            i++;
        }
        if (i == anyons.size()) {
            return 0;
        }
        used[i] = true;
        int best = 1 << 30;
        for (size_t j = i + 1; j < anyons.size(); j++) {
            if (!used[j]) {
                used[j] = true;
                best = std::min(best, toroidal_path_length(lat, anyons[i], anyons[j]) + rec());
                used[j] = false;
            }
        }
        used[i] = false;
        return best;
    };
    return rec();
}

std::vector<int> random_anyons(std::mt19937& gen, const CodeLattice& lat, Species s, int count) {
    std::vector<int> pool;
    for (int q = 0; q < lat.num_stabilizers(); q++) {
        if (lat.species_of(q) == s) {
            pool.push_back(q);
        }
    }
    std::shuffle(pool.begin(), pool.end(), gen);
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

bool is_perfect(const Matching& m, size_t n) {
    std::vector<int> seen(n, 0);
    for (auto [a, b] : m) {
        seen[a]++;
        seen[b]++;
    }
    return m.size() * 2 == n && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

TEST(Syndrome, BasicCases) {
    CodeLattice lat(8);
    ErrorSet e(lat);
    EXPECT_TRUE(extract_syndrome(e, lat).empty());
    e.toggle(5, Species::kM);
    auto s = extract_syndrome(e, lat);
    EXPECT_TRUE(s.of(Species::kE).empty());
    ASSERT_EQ(s.of(Species::kM).size(), 2u);
    for (int q : s.of(Species::kM)) {
        EXPECT_EQ(lat.species_of(q), Species::kM);
    }
    ErrorSet logical(lat);
    for (int spin : lat.logical(LogicalClass::kEY)) {
        logical.toggle(spin, Species::kE);
    }
    EXPECT_TRUE(extract_syndrome(logical, lat).empty());
}

TEST(Syndrome, Linearity) {
    CodeLattice lat(6);
    std::mt19937 gen(2);
    for (int trial = 0; trial < 50; trial++) {
        ErrorSet a(lat), b(lat);
        for (int k = 0; k < 6; k++) {
            a.toggle(gen() % lat.num_spins(), gen() % 2 ? Species::kE : Species::kM);
            b.toggle(gen() % lat.num_spins(), gen() % 2 ? Species::kE : Species::kM);
        }
        auto sa = extract_syndrome(a, lat), sb = extract_syndrome(b, lat);
        ErrorSet ab = a;
        ab ^= b;
        auto sab = extract_syndrome(ab, lat);
        for (Species s : kAllSpecies) {
            std::vector<int> x;
            std::set_symmetric_difference(sa.of(s).begin(), sa.of(s).end(), sb.of(s).begin(), sb.of(s).end(),
                                          std::back_inserter(x));
            EXPECT_EQ(sab.of(s), x);
        }
    }
}

TEST(Matching, ExactEqualsBruteForce) {
    CodeLattice lat(8);
    std::mt19937 gen(17);
    for (int trial = 0; trial < 200; trial++) {
        int count = 2 * (1 + gen() % 5);
        auto anyons = random_anyons(gen, lat, gen() % 2 ? Species::kE : Species::kM, count);
        Matching m = exact_matching(anyons, lat);
        EXPECT_TRUE(is_perfect(m, anyons.size()));
        EXPECT_EQ(matching_weight(anyons, m, lat), brute_min_weight(anyons, lat));
    }
}

TEST(Matching, SixAnyonsAllFifteenPairings) {
    CodeLattice lat(8);
    std::mt19937 gen(99);
    auto anyons = random_anyons(gen, lat, Species::kE, 6);
    int best = 1 << 30, count = 0;
    for (int a = 1; a < 6; a++) {
        std::vector<int> rest;
        for (int k = 1; k < 6; k++) {
            if (k != a) {
                rest.push_back(k);
            }
        }
        for (int b = 1; b < 4; b++) {
            std::vector<int> last;
            for (int k = 1; k < 4; k++) {
                if (k != b) {
                    last.push_back(rest[k]);
                }
            }
            Matching m = {{0, a}, {rest[0], rest[b]}, {last[0], last[1]}};
            best = std::min(best, matching_weight(anyons, m, lat));
            count++;
        }
    }
    EXPECT_EQ(count, 15);
    EXPECT_EQ(matching_weight(anyons, exact_matching(anyons, lat), lat), best);
}

TEST(Matching, DeterministicTieBreak) {
    CodeLattice lat(8);
    std::vector<int> anyons = {lat.stabilizer_index(Species::kE, 2, 2), lat.stabilizer_index(Species::kE, 4, 2),
                               lat.stabilizer_index(Species::kE, 2, 4), lat.stabilizer_index(Species::kE, 4, 4)};
    Matching m = exact_matching(anyons, lat);
    Matching expected = {{0, 1}, {2, 3}};
    EXPECT_EQ(m, expected);
    EXPECT_EQ(exact_matching(anyons, lat), m);
}

TEST(Matching, GreedyIsPerfect) {
    CodeLattice lat(12);
    std::mt19937 gen(8);
    for (int trial = 0; trial < 20; trial++) {
        auto anyons = random_anyons(gen, lat, Species::kM, 24);
        Matching m = greedy_matching(anyons, lat);
        EXPECT_TRUE(is_perfect(m, anyons.size()));
        EXPECT_GE(matching_weight(anyons, m, lat), 12);
    }
}

TEST(CorrectionPath, ShortestAndConnecting) {
    CodeLattice lat(8);
    std::mt19937 gen(12);
    for (int trial = 0; trial < 300; trial++) {
        Species s = gen() % 2 ? Species::kE : Species::kM;
        auto ab = random_anyons(gen, lat, s, 2);
        auto path = correction_path(ab[0], ab[1], lat);
        EXPECT_EQ(static_cast<int>(path.size()), toroidal_path_length(lat, ab[0], ab[1]));
        ErrorSet e(lat);
        for (int spin : path) {
            e.toggle(spin, s);
        }
        EXPECT_EQ(extract_syndrome(e, lat).of(s), ab);
    }
}

TEST(Decode, AdjacentPairGivesSingleSpin) {
    CodeLattice lat(8);
    ErrorSet e(lat);
    e.toggle(lat.vertical_spin(3, 3), Species::kE);
    auto c = decode(extract_syndrome(e, lat), lat);
    EXPECT_EQ(c.weight(), 1);
    EXPECT_EQ(c, e);
}

TEST(Decode, ClearsRandomSyndromes) {
    CodeLattice lat(8);
    std::mt19937 gen(31);
    for (int trial = 0; trial < 300; trial++) {
        ErrorSet e(lat);
        int flips = gen() % 30;
        for (int k = 0; k < flips; k++) {
            e.toggle(gen() % lat.num_spins(), gen() % 2 ? Species::kE : Species::kM);
        }
        auto c = decode(extract_syndrome(e, lat), lat);
        ErrorSet residual = e;
        residual ^= c;
        EXPECT_TRUE(extract_syndrome(residual, lat).empty());
        EXPECT_NO_THROW(is_logical_failure(e, c, lat));
    }
}

TEST(Decode, RejectsOddSyndrome) {
    CodeLattice lat(4);
    Syndrome s;
    s.anyons[0] = {1, 2, 3};
    EXPECT_THROW(decode(s, lat), InvariantError);
}

TEST(LogicalFailure, Cases) {
    CodeLattice lat(8);
    ErrorSet e(lat);
    e.toggle(3, Species::kE);
    e.toggle(70, Species::kM);
    EXPECT_FALSE(is_logical_failure(e, e, lat).any());

    for (int c = 0; c < kNumLogicalClasses; c++) {
        auto cls = static_cast<LogicalClass>(c);
        Species s = c < 2 ? Species::kE : Species::kM;
        ErrorSet rep(lat);
        for (int spin : lat.logical(cls)) {
            rep.toggle(spin, s);
        }
        auto lf = is_logical_failure(rep, ErrorSet(lat), lat);
        EXPECT_EQ(lf.count(), 1);
        EXPECT_TRUE(lf[cls]);
    }

    ErrorSet single(lat);
    single.toggle(0, Species::kE);
    EXPECT_THROW(is_logical_failure(single, ErrorSet(lat), lat), InvariantError);
}

TEST(LogicalFailure, HomologousChainsAgree) {
    // A logical representative shifted by one row is in the same class.
    CodeLattice lat(8);
    ErrorSet rep(lat);
    for (int k = 0; k < 8; k++) {
        rep.toggle(lat.horizontal_spin(k, 3), Species::kE);
    }
    auto lf = is_logical_failure(rep, ErrorSet(lat), lat);
    EXPECT_EQ(lf.count(), 1);
    EXPECT_TRUE(lf[LogicalClass::kEX]);
}

TEST(LogicalFailure, LowWeightErrorsAreCorrected) {
    CodeLattice lat(8);
    std::mt19937 gen(77);
    int failures = 0;
    const int trials = 2000;
    for (int trial = 0; trial < trials; trial++) {
        ErrorSet e(lat);
        int weight = 1 + gen() % 2;
        for (int k = 0; k < weight; k++) {
            e.toggle(gen() % lat.num_spins(), gen() % 2 ? Species::kE : Species::kM);
        }
        failures += is_logical_failure(e, decode(extract_syndrome(e, lat), lat), lat).any();
    }
    EXPECT_LT(failures, trials / 100);
}

}  // namespace
}  // namespace tcbath
