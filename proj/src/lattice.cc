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

#include "tcbath/lattice.h"

#include <cmath>
#include <cstdlib>
#include <string>

#include "tcbath/error.h"

namespace tcbath {

namespace {

int wrap(int v, int L) {
    v %= L;
    return v < 0 ? v + L : v;
}

}  // namespace

std::string_view species_name(Species s) {
    return s == Species::kE ? "e" : "m";
}

Species parse_species(std::string_view name) {
    if (name == "e") {
        return Species::kE;
    }
    if (name == "m") {
        return Species::kM;
    }
    throw ParameterError("unknown species '" + std::string(name) + "' (expected e or m)");
}

std::string_view logical_class_name(LogicalClass c) {
    switch (c) {
        case LogicalClass::kEX:
            return "e_x";
        case LogicalClass::kEY:
            return "e_y";
        case LogicalClass::kMX:
            return "m_x";
        case LogicalClass::kMY:
            return "m_y";
    }
    return "?";
}

CodeLattice::CodeLattice(int L) : L_(L) {
    if (L < 2 || L % 2 != 0) {
        throw SizeError("lattice size must be a positive even integer >= 2, got " + std::to_string(L));
    }
    const int n = L * L;
    stabilizers_.resize(2 * n);
    toggles_.resize(2 * 2 * n);
    for (int j = 0; j < L; j++) {
        for (int i = 0; i < L; i++) {
            auto& s = stabilizers_[j * L + i];
            s.species = Species::kE;
            s.col = i;
            s.row = j;
            s.pos = {static_cast<double>(i), static_cast<double>(j)};
            s.spins = {horizontal_spin(i, j), horizontal_spin(i - 1, j), vertical_spin(i, j), vertical_spin(i, j - 1)};

            auto& p = stabilizers_[n + j * L + i];
            p.species = Species::kM;
            p.col = i;
            p.row = j;
            p.pos = {i + 0.5, j + 0.5};
            p.spins = {horizontal_spin(i, j), horizontal_spin(i, j + 1), vertical_spin(i, j), vertical_spin(i + 1, j)};
        }
    }
    for (int j = 0; j < L; j++) {
        for (int i = 0; i < L; i++) {
            int h = horizontal_spin(i, j);
            toggles_[2 * h + index_of(Species::kE)] = {
                stabilizer_index(Species::kE, i, j), stabilizer_index(Species::kE, i + 1, j)};
            toggles_[2 * h + index_of(Species::kM)] = {
                stabilizer_index(Species::kM, i, j - 1), stabilizer_index(Species::kM, i, j)};
            int v = vertical_spin(i, j);
            toggles_[2 * v + index_of(Species::kE)] = {
                stabilizer_index(Species::kE, i, j), stabilizer_index(Species::kE, i, j + 1)};
            toggles_[2 * v + index_of(Species::kM)] = {
                stabilizer_index(Species::kM, i - 1, j), stabilizer_index(Species::kM, i, j)};
        }
    }
    for (int k = 0; k < L; k++) {
        logicals_[static_cast<int>(LogicalClass::kEX)].push_back(horizontal_spin(k, 0));
        logicals_[static_cast<int>(LogicalClass::kEY)].push_back(vertical_spin(0, k));
        logicals_[static_cast<int>(LogicalClass::kMX)].push_back(vertical_spin(k, 0));
        logicals_[static_cast<int>(LogicalClass::kMY)].push_back(horizontal_spin(0, k));
    }
}

int CodeLattice::stabilizer_index(Species s, int col, int row) const {
    int base = s == Species::kE ? 0 : L_ * L_;
    return base + wrap(row, L_) * L_ + wrap(col, L_);
}

int CodeLattice::horizontal_spin(int col, int row) const {
    return wrap(row, L_) * L_ + wrap(col, L_);
}

int CodeLattice::vertical_spin(int col, int row) const {
    return L_ * L_ + wrap(row, L_) * L_ + wrap(col, L_);
}

std::array<int, 2> CodeLattice::doubled_position(int q) const {
    const auto& s = stabilizers_[q];
    int off = s.species == Species::kE ? 0 : 1;
    return {2 * s.col + off, 2 * s.row + off};
}

nlohmann::json CodeLattice::to_json() const {
    nlohmann::json j;
    j["L"] = L_;
    j["num_spins"] = num_spins();
    auto& stabs = j["stabilizers"];
    stabs = nlohmann::json::array();
    for (int q = 0; q < num_stabilizers(); q++) {
        const auto& s = stabilizers_[q];
        stabs.push_back({{"index", q},
                         {"species", species_name(s.species)},
                         {"x", s.pos.x},
                         {"y", s.pos.y},
                         {"spins", s.spins}});
    }
    auto& logic = j["logical_reps"];
    for (int c = 0; c < kNumLogicalClasses; c++) {
        logic[std::string(logical_class_name(static_cast<LogicalClass>(c)))] = logicals_[c];
    }
    return j;
}

double planar_distance(const CodeLattice& lattice, int a, int b) {
    auto pa = lattice.stabilizer(a).pos;
    auto pb = lattice.stabilizer(b).pos;
    return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

double toroidal_distance(const CodeLattice& lattice, int a, int b) {
    const double L = lattice.size();
    auto pa = lattice.stabilizer(a).pos;
    auto pb = lattice.stabilizer(b).pos;
    double dx = std::fmod(std::abs(pa.x - pb.x), L);
    double dy = std::fmod(std::abs(pa.y - pb.y), L);
    dx = std::min(dx, L - dx);
    dy = std::min(dy, L - dy);
    return std::hypot(dx, dy);
}

int toroidal_path_length(const CodeLattice& lattice, int a, int b) {
    const int L = lattice.size();
    const auto& sa = lattice.stabilizer(a);
    const auto& sb = lattice.stabilizer(b);
    int dx = wrap(sa.col - sb.col, L);
    int dy = wrap(sa.row - sb.row, L);
    return std::min(dx, L - dx) + std::min(dy, L - dy);
}

BathLattice::BathLattice(const CodeLattice& lattice, int Lambda) : Lambda_(Lambda) {
    const int L = lattice.size();
    if (Lambda < 2 * L) {
        throw SizeError("bath side " + std::to_string(Lambda) + " cannot host an L=" + std::to_string(L) +
                        " patch (need Lambda >= 2L)");
    }
    // u = x + y spans [0, 2L-1]; v = y - x spans [-(L-1), L-1].
    const int u_off = (Lambda - 2 * L) / 2;
    const int v_off = (Lambda - (2 * L - 1)) / 2 + (L - 1);
    const int z = Lambda / 2;
    sites_.resize(lattice.num_stabilizers());
    for (int q = 0; q < lattice.num_stabilizers(); q++) {
        auto d = lattice.doubled_position(q);
        int u = (d[0] + d[1]) / 2;
        int v = (d[1] - d[0]) / 2;
        sites_[q] = {u + u_off, v + v_off, z};
    }
}

int BathLattice::linear_index(const std::array<int, 3>& site) const {
    return (wrap(site[0], Lambda_) * Lambda_ + wrap(site[1], Lambda_)) * Lambda_ + wrap(site[2], Lambda_);
}

double BathLattice::distance(int a, int b) const {
    const auto& sa = sites_[a];
    const auto& sb = sites_[b];
    double dx = sa[0] - sb[0];
    double dy = sa[1] - sb[1];
    double dz = sa[2] - sb[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace tcbath
