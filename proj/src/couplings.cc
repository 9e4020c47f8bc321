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

#include "tcbath/couplings.h"

#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "tcbath/error.h"

namespace tcbath {

using std::numbers::pi;

std::string_view coupling_kind_name(CouplingKind k) {
    return k == CouplingKind::kDisplacement ? "displacement" : "density";
}

CouplingKind parse_coupling_kind(std::string_view name) {
    if (name == "displacement") {
        return CouplingKind::kDisplacement;
    }
    if (name == "density") {
        return CouplingKind::kDensity;
    }
    throw ParameterError("unknown coupling kind '" + std::string(name) + "'");
}

std::string_view rate_law_name(RateLawKind k) {
    switch (k) {
        case RateLawKind::kGlauber:
            return "glauber";
        case RateLawKind::kMetropolis:
            return "metropolis";
        case RateLawKind::kSymmetricExponential:
            return "symmetric-exponential";
    }
    return "?";
}

RateLawKind parse_rate_law(std::string_view name) {
    if (name == "glauber") {
        return RateLawKind::kGlauber;
    }
    if (name == "metropolis") {
        return RateLawKind::kMetropolis;
    }
    if (name == "symmetric-exponential") {
        return RateLawKind::kSymmetricExponential;
    }
    throw ParameterError("unknown rate law '" + std::string(name) + "'");
}

void ModelParams::validate() const {
    if (!(A > 0) || !(t > 0) || !(beta > 0) || !(gamma0 > 0)) {
        throw ParameterError("A, t, beta and gamma0 must all be positive");
    }
    if (L < 2 || L % 2 != 0) {
        throw SizeError("L must be a positive even integer, got " + std::to_string(L));
    }
    if (Lambda < 1) {
        throw SizeError("Lambda must be positive, got " + std::to_string(Lambda));
    }
    if (coupling == CouplingKind::kDensity && A / t > kMaxDensityCouplingRatio) {
        throw ParameterError("density coupling requires A/t <= " + std::to_string(kMaxDensityCouplingRatio));
    }
}

CouplingPattern uniform_pattern(const CodeLattice& lattice, double A) {
    if (!(A > 0)) {
        throw ParameterError("coupling amplitude must be positive");
    }
    CouplingPattern pattern;
    pattern.amplitudes.assign(lattice.num_stabilizers(), A);
    pattern.A_s = A;
    pattern.A_w = A;
    return pattern;
}

CouplingPattern build_pattern_square(const CodeLattice& lattice, double A_s, double A_w) {
    if (!(A_w > 0) || !(A_s > 0)) {
        throw ParameterError("pattern amplitudes must be positive");
    }
    if (A_w > A_s) {
        throw ParameterError("weak amplitude exceeds strong amplitude");
    }
    if (lattice.size() % 4 != 0) {
        throw SizeError("the square strong/weak pattern needs L divisible by 4, got " + std::to_string(lattice.size()));
    }
    CouplingPattern pattern;
    pattern.A_s = A_s;
    pattern.A_w = A_w;
    pattern.amplitudes.resize(lattice.num_stabilizers());
    for (int q = 0; q < lattice.num_stabilizers(); q++) {
        const auto& s = lattice.stabilizer(q);
        bool weak = s.col % 4 < 2 && s.row % 4 < 2;
        pattern.amplitudes[q] = weak ? A_w : A_s;
    }
    return pattern;
}

namespace {

/// Same-species neighbors of q (stabilizers sharing a spin with q).
std::vector<int> neighbors_of(const CodeLattice& lattice, int q) {
    std::vector<int> out;
    Species s = lattice.species_of(q);
    for (int spin : lattice.stabilizer(q).spins) {
        const auto& pair = lattice.toggled_by(spin, s);
        out.push_back(pair[0] == q ? pair[1] : pair[0]);
    }
    return out;
}

bool weak_in_pattern(const CouplingPattern& pattern, int q) {
    return pattern.amplitudes[q] < pattern.A_s;
}

}  // namespace

std::vector<int> weak_regions(const CodeLattice& lattice, const CouplingPattern& pattern) {
    const int n = lattice.num_stabilizers();
    std::vector<int> region(n, -1);
    int next = 0;
    for (int start = 0; start < n; start++) {
        if (region[start] != -1 || !weak_in_pattern(pattern, start)) {
            continue;
        }
        std::deque<int> frontier{start};
        region[start] = next;
        while (!frontier.empty()) {
            int q = frontier.front();
            frontier.pop_front();
            for (int nb : neighbors_of(lattice, q)) {
                if (region[nb] == -1 && weak_in_pattern(pattern, nb)) {
                    region[nb] = next;
                    frontier.push_back(nb);
                }
            }
        }
        next++;
    }
    return region;
}

std::vector<PatternViolation> pattern_violations(const CodeLattice& lattice, const CouplingPattern& pattern) {
    auto region = weak_regions(lattice, pattern);
    std::vector<PatternViolation> out;

    auto check = [&](int a, int b, Species sp) {
        std::set<int> toggled;
        for (int spin : {a, b}) {
            if (spin < 0) {
                continue;
            }
            for (int q : lattice.toggled_by(spin, sp)) {
                if (!toggled.erase(q)) {
                    toggled.insert(q);
                }
            }
        }
        if (toggled.size() < 2) {
            return;
        }
        for (int q : toggled) {
            if (region[q] < 0) {
                return;
            }
        }
        int first = *toggled.begin();
        for (int q : toggled) {
            if (region[q] != region[first]) {
                out.push_back({a, b, sp, first, q});
                return;
            }
        }
    };

    for (Species sp : kAllSpecies) {
        for (int a = 0; a < lattice.num_spins(); a++) {
            check(a, -1, sp);
        }
        // Local two-spin processes: both spins on a common stabilizer.
        std::set<std::pair<int, int>> seen;
        for (int q = 0; q < lattice.num_stabilizers(); q++) {
            const auto& spins = lattice.stabilizer(q).spins;
            for (int i = 0; i < 4; i++) {
                for (int j = i + 1; j < 4; j++) {
                    auto key = std::minmax(spins[i], spins[j]);
                    if (seen.insert(key).second) {
                        check(key.first, key.second, sp);
                    }
                }
            }
        }
    }
    return out;
}

int min_weak_region_separation(const CodeLattice& lattice, const CouplingPattern& pattern) {
    auto region = weak_regions(lattice, pattern);
    const int n = lattice.num_stabilizers();
    int best = std::numeric_limits<int>::max();
    for (int start = 0; start < n; start++) {
        if (region[start] < 0) {
            continue;
        }
        std::vector<int> dist(n, -1);
        std::deque<int> frontier{start};
        dist[start] = 0;
        while (!frontier.empty()) {
            int q = frontier.front();
            frontier.pop_front();
            if (dist[q] >= best) {
                break;
            }
            if (region[q] >= 0 && region[q] != region[start]) {
                best = std::min(best, dist[q]);
                break;
            }
            for (int nb : neighbors_of(lattice, q)) {
                if (dist[nb] < 0) {
                    dist[nb] = dist[q] + 1;
                    frontier.push_back(nb);
                }
            }
        }
    }
    return best;
}

double kernel_displacement(double r, double a_p, double a_q, double t) {
    if (!(r > 0)) {
        throw ParameterError("displacement kernel needs r > 0; use the self term for r = 0");
    }
    return -a_p * a_q / (4.0 * pi * t * r);
}

double kernel_density(double r, double a_p, double a_q, double t, double temperature) {
    if (!(r > 0)) {
        throw ParameterError("density kernel needs r > 0");
    }
    return -a_p * a_q * temperature / (32.0 * pi * pi * t * t * r * r);
}

double self_term_integral(double t, double A, int k_grid) {
    if (k_grid < 32) {
        throw ParameterError("self_term_integral needs k_grid >= 32");
    }
    std::vector<double> c(k_grid);
    for (int i = 0; i < k_grid; i++) {
        c[i] = std::cos(-pi + (i + 0.5) * 2.0 * pi / k_grid);
    }
    double total = 0.0;
    for (int i = 0; i < k_grid; i++) {
        for (int j = 0; j < k_grid; j++) {
            double partial = 0.0;
            double base = 3.0 - c[i] - c[j];
            for (int k = 0; k < k_grid; k++) {
                partial += 1.0 / (base - c[k]);
            }
            total += partial;
        }
    }
    double mean_inverse = total / (static_cast<double>(k_grid) * k_grid * k_grid);
    return -A * A * mean_inverse / (2.0 * t);
}

InteractionKernel::InteractionKernel(const CodeLattice& lattice,
                                     const CouplingPattern& pattern,
                                     const ModelParams& params)
    : kind_(params.coupling) {
    params.validate();
    const int n = lattice.num_stabilizers();
    if (static_cast<int>(pattern.amplitudes.size()) != n) {
        throw ParameterError("coupling pattern does not match the lattice");
    }
    const int L = lattice.size();
    offset_ = 2 * L - 1;
    width_ = 4 * L - 1;
    pos2_.resize(2 * n);
    for (int q = 0; q < n; q++) {
        auto d = lattice.doubled_position(q);
        pos2_[2 * q] = d[0];
        pos2_[2 * q + 1] = d[1];
    }
    amplitudes_ = pattern.amplitudes;

    radial_.assign(static_cast<size_t>(width_) * width_, 0.0);
    for (int dx = -offset_; dx <= offset_; dx++) {
        for (int dy = -offset_; dy <= offset_; dy++) {
            if (dx == 0 && dy == 0) {
                continue;
            }
            // Only same-parity displacements occur; fill all for simplicity.
            double r = 0.5 * std::sqrt(static_cast<double>(dx * dx + dy * dy));
            double v = kind_ == CouplingKind::kDisplacement
                           ? kernel_displacement(r, 1.0, 1.0, params.t)
                           : kernel_density(r, 1.0, 1.0, params.t, params.temperature());
            radial_[(dx + offset_) * width_ + (dy + offset_)] = v;
        }
    }

    mu_.assign(n, 0.0);
    for (int p = 0; p < n; p++) {
        double s = 0.0;
        for (int q = 0; q < n; q++) {
            double j = pair(p, q);
            s += j;
            max_abs_pair_ = std::max(max_abs_pair_, std::abs(j));
        }
        mu_[p] = -4.0 * s;
    }

    self_term_.assign(n, 0.0);
    if (kind_ == CouplingKind::kDisplacement) {
        for (int p = 0; p < n; p++) {
            self_term_[p] = -kSelfTermCoefficient * amplitudes_[p] * amplitudes_[p] / params.t;
        }
    }
}

InteractionKernel build_kernel(const CodeLattice& lattice, const CouplingPattern& pattern, const ModelParams& params) {
    return InteractionKernel(lattice, pattern, params);
}

double lattice_sum_inverse_r(int L, int exponent) {
    if (exponent != 1 && exponent != 2) {
        throw ParameterError("lattice_sum_inverse_r supports exponents 1 and 2");
    }
    CodeLattice lattice(L);
    int center = lattice.center_stabilizer();
    auto c = lattice.doubled_position(center);
    double sum = 0.0;
    for (int q = 0; q < lattice.num_stabilizers(); q++) {
        if (q == center) {
            continue;
        }
        auto d = lattice.doubled_position(q);
        double dx = d[0] - c[0];
        double dy = d[1] - c[1];
        double r2 = 0.25 * (dx * dx + dy * dy);
        sum += exponent == 1 ? 1.0 / std::sqrt(r2) : 1.0 / r2;
    }
    return sum;
}

double square_inverse_r_constant() {
    return 4.0 * std::log(1.0 + std::sqrt(2.0));
}

}  // namespace tcbath
