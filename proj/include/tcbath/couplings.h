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

#ifndef TCBATH_COUPLINGS_H
#define TCBATH_COUPLINGS_H

#include <string_view>
#include <vector>

#include "tcbath/lattice.h"

namespace tcbath {

/// Numerical value of the Brillouin-zone integral (1/(2pi)^3) int d^3k / eps_k
/// in units of 1/t, quoted to three digits.
constexpr double kSelfTermCoefficient = 0.253;

enum class CouplingKind { kDisplacement, kDensity };
enum class RateLawKind { kGlauber, kMetropolis, kSymmetricExponential };

std::string_view coupling_kind_name(CouplingKind k);
CouplingKind parse_coupling_kind(std::string_view name);
std::string_view rate_law_name(RateLawKind k);
RateLawKind parse_rate_law(std::string_view name);

struct ModelParams {
    double A = 1.0;
    double t = 1.0;
    double beta = 1.0;
    int L = 8;
    int Lambda = 16;
    CouplingKind coupling = CouplingKind::kDisplacement;
    double gamma0 = 1.0;
    RateLawKind rate_law = RateLawKind::kGlauber;

    double temperature() const {
        return 1.0 / beta;
    }
    /// Throws ParameterError / SizeError on violations.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

/// Largest A/t accepted for the density coupling (perturbative regime).
constexpr double kMaxDensityCouplingRatio = 0.1;

/// Per-stabilizer coupling amplitudes.
struct CouplingPattern {
    std::vector<double> amplitudes;
    double A_s = 1.0;
    double A_w = 1.0;

    bool is_uniform() const {
        return A_s == A_w;
    }
    bool is_weak(int q) const {
        return A_w < A_s && amplitudes[q] == A_w;
    }
};

CouplingPattern uniform_pattern(const CodeLattice& lattice, double A);

/// Strong/weak layout on the square tiling. Per species, stabilizers whose
/// integer coordinate parts both lie in {0, 1} mod 4 are weak: 2x2 blocks of
/// weak stabilizers on a period-4 grid, a quarter of each species. Distinct
/// blocks are three spins apart. Requires L % 4 == 0 and A_w <= A_s.
CouplingPattern build_pattern_square(const CodeLattice& lattice, double A_s, double A_w);

/// Connected weak regions under single-spin adjacency. Entry q is the region id
/// of weak stabilizer q, or -1 for strong stabilizers.
std::vector<int> weak_regions(const CodeLattice& lattice, const CouplingPattern& pattern);

/// A single- or local two-spin process that moves an anyon between two
/// different weak regions without occupying a strong stabilizer.
struct PatternViolation {
    int spin_a;
    int spin_b;  // -1 for single-spin processes
    Species species;
    int from;
    int to;
};

/// Enumerates every single-spin process and every two-spin process on spins
/// sharing a stabilizer, for both Pauli species.
std::vector<PatternViolation> pattern_violations(const CodeLattice& lattice, const CouplingPattern& pattern);

/// Minimum number of spins on a single-spin path between weak stabilizers of
/// different regions (same species).
int min_weak_region_separation(const CodeLattice& lattice, const CouplingPattern& pattern);

/// -A_p A_q / (4 pi t r). Throws ParameterError for r <= 0.
double kernel_displacement(double r, double a_p, double a_q, double t);

/// -A_p A_q T / (32 pi^2 t^2 r^2). Throws ParameterError for r <= 0.
double kernel_density(double r, double a_p, double a_q, double t, double temperature);

/// -A^2 (1/(2pi)^3) int_BZ d^3k / eps_k, eps_k = 2t(3 - cos kx - cos ky - cos kz),
/// on a midpoint grid with k_grid points per axis (k_grid >= 32).
double self_term_integral(double t, double A, int k_grid);

/// Bath-mediated pair couplings J_{p,q} over planar distance and chemical
/// potentials mu_p = -4 sum_{q != p} J_{p,q}.
///
/// Pair values are generated on demand from a radial table indexed by the
/// doubled-coordinate displacement, so memory stays O(L^2).
class InteractionKernel {
   public:
    InteractionKernel(const CodeLattice& lattice, const CouplingPattern& pattern, const ModelParams& params);

    int num_stabilizers() const {
        return static_cast<int>(mu_.size());
    }
    CouplingKind kind() const {
        return kind_;
    }

    /// J_{p,q} for p != q; zero on the diagonal (see self_term).
    double pair(int p, int q) const {
        if (p == q) {
            return 0.0;
        }
        int dx = pos2_[2 * p] - pos2_[2 * q] + offset_;
        int dy = pos2_[2 * p + 1] - pos2_[2 * q + 1] + offset_;
        return amplitudes_[p] * amplitudes_[q] * radial_[dx * width_ + dy];
    }
    double mu(int p) const {
        return mu_[p];
    }
    const std::vector<double>& mu() const {
        return mu_;
    }
    /// J_{p,p}: -0.253 A_p^2 / t for the displacement coupling, 0 otherwise.
    double self_term(int p) const {
        return self_term_[p];
    }
    double amplitude(int p) const {
        return amplitudes_[p];
    }
    double max_abs_pair() const {
        return max_abs_pair_;
    }

   private:
    CouplingKind kind_;
    int offset_;
    int width_;
    std::vector<int> pos2_;
    std::vector<double> amplitudes_;
    std::vector<double> radial_;
    std::vector<double> mu_;
    std::vector<double> self_term_;
    double max_abs_pair_ = 0.0;
};

InteractionKernel build_kernel(const CodeLattice& lattice, const CouplingPattern& pattern, const ModelParams& params);

/// Sum over all stabilizers q != center of 1 / |R_q - R_center|^exponent
/// (exponent 1 or 2), planar distance, both species.
double lattice_sum_inverse_r(int L, int exponent);

/// Integral of 1/sqrt(x^2 + y^2) over [-1/2, 1/2]^2: 4 ln(1 + sqrt 2).
double square_inverse_r_constant();

}  // namespace tcbath

#endif
