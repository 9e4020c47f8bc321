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


#ifndef TCBATH_BATH_H
#define TCBATH_BATH_H

#include <array>
#include <complex>
#include <vector>

#include "tcbath/couplings.h"
#include "tcbath/lattice.h"

namespace tcbath {

/// Madelung-type constant of the simple cubic lattice: the Riemann sum of
/// 1/k^2 over the nonzero points of a cubic k-grid with spacing 2 pi / Lambda
/// falls short of the Brillouin-zone integral by xi / (4 pi Lambda).
constexpr double kCubicMadelung = 2.837297;
constexpr double kZeta3Over2 = 2.612375348685488;

/// How mode sums treat the singular Bose points (k = 0, and k = -q for chi).
/// kExcluded drops them; kCompensated drops them and adds back the analytic
/// finite-size correction of the excluded 1/k^2 cell.
enum class ZeroMode { kExcluded, kCompensated };

/// eps_k = 2t (3 - cos kx - cos ky - cos kz) on the Lambda^3 grid
/// k = (2 pi / Lambda) (a, b, c).
class BathSpectrum {
   public:
    BathSpectrum(double t, int Lambda);

    int side() const {
        return Lambda_;
    }
    double hopping() const {
        return t_;
    }
    int num_modes() const {
        return Lambda_ * Lambda_ * Lambda_;
    }
    double energy(int a, int b, int c) const;
    double energy(int index) const {
        return eps_[index];
    }
    int index(int a, int b, int c) const;
    /// cos(2 pi a / Lambda) for a in [0, Lambda).
    double cos_k(int a) const {
        return cos_[a];
    }

   private:
    double t_;
    int Lambda_;
    std::vector<double> cos_;
    std::vector<double> eps_;
};

/// J(dR) = -(A^2 / N) sum_{k != 0} cos(k . dR) / eps_k, plus
/// -A^2 [xi / (4 pi t Lambda) + |dR|^2 / (6 t Lambda^3)] when compensated.
/// Requires Lambda >= 8.
double discrete_kernel(const BathSpectrum& spectrum, const std::array<int, 3>& dR, double A,
                       ZeroMode mode = ZeroMode::kCompensated);
double discrete_kernel(const std::array<int, 3>& dR, const ModelParams& params,
                       ZeroMode mode = ZeroMode::kCompensated);

/// Polaron ground-state energy of the displacement-coupled bath for stabilizer
/// values W_p at the given sites: -(A^2 / N) sum_{k != 0} |sum_p W_p e^{i k.R_p}|^2 / eps_k.
double displacement_sector_energy(const BathSpectrum& spectrum, const std::vector<std::array<int, 3>>& sites,
                                  const std::vector<int>& W, double A);

/// sum_{p, p'} J(R_p - R_p') W_p W_p' with the uncompensated discrete kernel
/// (diagonal included). Equals displacement_sector_energy identically.
double displacement_pair_energy(const BathSpectrum& spectrum, const std::vector<std::array<int, 3>>& sites,
                                const std::vector<int>& W, double A);

/// mu + 4 |J_pp|: cost of creating an anyon faster than the bath relaxes.
double fast_creation_energy(double mu, double self_term);

/// Static Lindhard susceptibility
/// chi(q) = (1/N) sum_k (n_k - n_{k+q}) / (eps_{k+q} - eps_k),
/// with the degenerate limit beta n (n + 1) and the two Bose-singular points
/// dropped (compensated by 2 (T / eps_q) xi / (4 pi t Lambda) by default).
/// q is given in grid units; q = 0 throws ParameterError.
double susceptibility(const std::array<int, 3>& q, double beta, double t, int Lambda,
                      ZeroMode mode = ZeroMode::kCompensated);

/// |q| for a grid wavevector, using the shortest image of each component.
double wavevector_norm(const std::array<int, 3>& q, int Lambda);

/// Bose occupation 1 / (e^{beta eps} - 1).
double bose(double eps, double beta);

/// Density-coupled single-particle problem: hopping -t on the periodic
/// Lambda^3 lattice, diagonal 6t + m, plus A W_p on each coupled site.
struct DensityOracleParams {
    double A = 0.01;
    double t = 1.0;
    double beta = 0.05;
    double m = 0.1;
};

/// All single-particle eigenvalues, ascending. At most 10^4 sites.
std::vector<double> density_spectrum(const BathLattice& bath, const std::vector<int>& W, const DensityOracleParams& p);

/// F = T sum ln(1 - e^{-beta lambda}). Throws SpectrumError if any lambda <= 0.
double density_free_energy(const BathLattice& bath, const std::vector<int>& W, const DensityOracleParams& p);

struct DensityAnyonCost {
    double raw = 0.0;         // F(anyon at q) - F(vacuum) at coupling +A
    double second_order = 0.0;  // A-even part: odd orders cancel
    double prediction = 0.0;  // 4 sum_{p != q} |J2(r)|, bath distances
};

/// Free-energy cost of one anyon at stabilizer q compared with the
/// perturbative 1/r^2 kernel prediction.
DensityAnyonCost density_anyon_cost(const BathLattice& bath, int q, const DensityOracleParams& p);

/// 2A sqrt(1 + zeta(3/2) / (4 (pi beta t)^{3/2})).
double sigma_fast(double A, double beta, double t);

/// n-th central moment scale C_n; zero for odd n.
double moment(int n, double A, double beta, double t);

/// sum_{k, r} (-1)^k xi^r / (k! r! (n - k - 2r)!).
long double wick_double_sum(int n, long double xi);
/// xi^{n/2} / (n/2)! for even n, 0 for odd n.
long double wick_closed_form(int n, long double xi);
/// Relative agreement within tol (absolute, against the term magnitudes, for odd n).
bool wick_identity_check(int n, double xi, double tol = 1e-10);

}  // namespace tcbath

#endif
