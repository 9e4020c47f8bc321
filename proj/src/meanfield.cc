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


#include "tcbath/meanfield.h"

#include <algorithm>
#include <cmath>

#include "tcbath/error.h"

namespace tcbath {

double delta_N(double N, double delta0, int L) {
    return delta0 * (1.0 - 4.0 * N / (L * L - 2.0));
}

double mf_energy(double N, double delta0, int L) {
    return delta0 * N * (L * L - 2.0 * N) / (L * L - 2.0);
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::kSubcritical:
            return "subcritical";
        case Regime::kSupercritical:
            return "supercritical";
        case Regime::kBoundary:
            return "boundary";
    }
    return "?";
}

Regime classify_phase(double beta_delta0, double tol) {
    if (std::abs(beta_delta0 - 2.0) <= tol) {
        return Regime::kBoundary;
    }
    return beta_delta0 < 2.0 ? Regime::kSubcritical : Regime::kSupercritical;
}

double mean_field_rhs(double n, double beta_delta0) {
    return 1.0 / (std::exp(beta_delta0 * (1.0 - 2.0 * n)) + 1.0);
}

namespace {

double residual(double n, double b) {
    return mean_field_rhs(n, b) - n;
}

double bisect(double lo, double hi, double b, double tol) {
    double flo = residual(lo, b);
    for (int it = 0; it < 200; it++) {
        double mid = 0.5 * (lo + hi);
        double fm = residual(mid, b);
        if (std::abs(fm) < tol || hi - lo < 1e-300) {
            return mid;
        }
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (mid == lo && mid == hi) {
            break;
        }
    }
    double mid = 0.5 * (lo + hi);
    if (std::abs(residual(mid, b)) < tol) {
        return mid;
    }
    throw ConvergenceError("mean-field bisection did not converge", lo, hi);
}

}  // namespace

MeanFieldSolution solve_self_consistent(double beta_delta0, double tol, int grid) {
    if (!(beta_delta0 > 0) || !(tol > 0)) {
        throw ParameterError("solve_self_consistent needs beta_delta0 > 0 and tol > 0");
    }
    if (grid < 4 || grid % 2 != 0) {
        throw ParameterError("grid must be an even number >= 4");
    }
    MeanFieldSolution sol;
    sol.beta_delta0 = beta_delta0;
    sol.regime = classify_phase(beta_delta0);

    // Scan [0, 1/2) and mirror: the root set is closed under n <-> 1 - n and
    // n = 1/2 is always a root.
    std::vector<double> lower;
    double prev_x = 0.0;
    double prev_f = residual(0.0, beta_delta0);
    for (int i = 1; i < grid / 2; i++) {
        double x = static_cast<double>(i) / grid;
        double f = residual(x, beta_delta0);
        if (f == 0.0) {
            lower.push_back(x);
        } else if ((f > 0) != (prev_f > 0) && prev_f != 0.0) {
            lower.push_back(bisect(prev_x, x, beta_delta0, tol));
        }
        prev_x = x;
        prev_f = f;
    }
    // Just above b = 2 the outer root can sit inside the last grid cell.
    const double edge = 0.5 - 1e-9;
    if (double f = residual(edge, beta_delta0); prev_f > 0 && f < 0) {
        lower.push_back(bisect(prev_x, edge, beta_delta0, tol));
    }
    for (double r : lower) {
        sol.roots.push_back(r);
    }
    sol.roots.push_back(0.5);
    for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
        sol.roots.push_back(1.0 - *it);
    }
    for (double r : sol.roots) {
        // f'(n) = 2 b rhs (1 - rhs) - 1; stable where f decreases through zero.
        double g = mean_field_rhs(r, beta_delta0);
        double slope = 2.0 * beta_delta0 * g * (1.0 - g) - 1.0;
        sol.stable.push_back(slope < 0);
    }
    return sol;
}

}  // namespace tcbath
