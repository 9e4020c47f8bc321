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


#ifndef TCBATH_MEANFIELD_H
#define TCBATH_MEANFIELD_H

#include <string_view>
#include <vector>

namespace tcbath {

/// Cost of creating one more pair when N pairs are spread uniformly:
/// delta0 (1 - 4N / (L^2 - 2)).
double delta_N(double N, double delta0, int L);

/// delta0 N (L^2 - 2N) / (L^2 - 2).
double mf_energy(double N, double delta0, int L);

enum class Regime { kSubcritical, kSupercritical, kBoundary };

std::string_view regime_name(Regime r);

/// Threshold at beta delta0 = 2; |beta_delta0 - 2| <= tol is kBoundary.
Regime classify_phase(double beta_delta0, double tol = 1e-9);

struct MeanFieldSolution {
    double beta_delta0 = 0.0;
    std::vector<double> roots;  // ascending
    std::vector<bool> stable;
    Regime regime = Regime::kSubcritical;
};

/// Right-hand side of n = 1 / (exp(b (1 - 2n)) + 1).
double mean_field_rhs(double n, double beta_delta0);

/// All roots of rhs(n) - n on [0, 1] by sign-bracketed bisection on a grid
/// of `grid` points, each refined until |f| < tol. Throws ConvergenceError
/// if a bracket fails to converge within the iteration cap.
MeanFieldSolution solve_self_consistent(double beta_delta0, double tol = 1e-13, int grid = 10000);

}  // namespace tcbath

#endif
