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


#include "tcbath/bath.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tcbath/error.h"

namespace tcbath {

using std::numbers::pi;

namespace {

int wrap(long v, int n) {
    long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

BathSpectrum::BathSpectrum(double t, int Lambda) : t_(t), Lambda_(Lambda) {
    if (!(t > 0)) {
        throw ParameterError("hopping t must be positive");
    }
    if (Lambda < 2) {
        throw SizeError("bath side must be >= 2, got " + std::to_string(Lambda));
    }
    cos_.resize(Lambda);
    for (int a = 0; a < Lambda; a++) {
        cos_[a] = std::cos(2.0 * pi * a / Lambda);
    }
    eps_.resize(static_cast<size_t>(Lambda) * Lambda * Lambda);
    for (int a = 0; a < Lambda; a++) {
        for (int b = 0; b < Lambda; b++) {
            for (int c = 0; c < Lambda; c++) {
                eps_[index(a, b, c)] = 2.0 * t * (3.0 - cos_[a] - cos_[b] - cos_[c]);
            }
        }
    }
    eps_[0] = 0.0;
}

int BathSpectrum::index(int a, int b, int c) const {
    return (wrap(a, Lambda_) * Lambda_ + wrap(b, Lambda_)) * Lambda_ + wrap(c, Lambda_);
}

double BathSpectrum::energy(int a, int b, int c) const {
    return eps_[index(a, b, c)];
}

double discrete_kernel(const BathSpectrum& spectrum, const std::array<int, 3>& dR, double A, ZeroMode mode) {
    const int n = spectrum.side();
    if (n < 8) {
        throw SizeError("discrete_kernel needs Lambda >= 8");
    }
    double sum = 0.0;
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            for (int c = 0; c < n; c++) {
                if (a == 0 && b == 0 && c == 0) {
                    continue;
                }
                int phase = wrap(static_cast<long>(a) * dR[0] + static_cast<long>(b) * dR[1] +
                                     static_cast<long>(c) * dR[2],
                                 n);
                sum += spectrum.cos_k(phase) / spectrum.energy(a, b, c);
            }
        }
    }
    double g = sum / spectrum.num_modes();
    if (mode == ZeroMode::kCompensated) {
        double r2 = static_cast<double>(dR[0]) * dR[0] + static_cast<double>(dR[1]) * dR[1] +
                    static_cast<double>(dR[2]) * dR[2];
        double t = spectrum.hopping();
        g += kCubicMadelung / (4.0 * pi * t * n) + r2 / (6.0 * t * n * n * n);
    }
    return -A * A * g;
}

double discrete_kernel(const std::array<int, 3>& dR, const ModelParams& params, ZeroMode mode) {
    BathSpectrum spectrum(params.t, params.Lambda);
    return discrete_kernel(spectrum, dR, params.A, mode);
}

double displacement_sector_energy(const BathSpectrum& spectrum, const std::vector<std::array<int, 3>>& sites,
                                  const std::vector<int>& W, double A) {
    if (sites.size() != W.size()) {
        throw ParameterError("sites and W differ in length");
    }
    const int n = spectrum.side();
    std::vector<double> sin_k(n);
    for (int a = 0; a < n; a++) {
        sin_k[a] = std::sin(2.0 * pi * a / n);
    }
    double total = 0.0;
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            for (int c = 0; c < n; c++) {
                if (a == 0 && b == 0 && c == 0) {
                    continue;
                }
                double re = 0.0;
                double im = 0.0;
                for (size_t p = 0; p < sites.size(); p++) {
                    int phase = wrap(static_cast<long>(a) * sites[p][0] + static_cast<long>(b) * sites[p][1] +
                                         static_cast<long>(c) * sites[p][2],
                                     n);
                    re += W[p] * spectrum.cos_k(phase);
                    im += W[p] * sin_k[phase];
                }
                total += (re * re + im * im) / spectrum.energy(a, b, c);
            }
        }
    }
    return -A * A * total / spectrum.num_modes();
}

double displacement_pair_energy(const BathSpectrum& spectrum, const std::vector<std::array<int, 3>>& sites,
                                const std::vector<int>& W, double A) {
    if (sites.size() != W.size()) {
        throw ParameterError("sites and W differ in length");
    }
    double e = 0.0;
    for (size_t p = 0; p < sites.size(); p++) {
        for (size_t q = 0; q < sites.size(); q++) {
            std::array<int, 3> d{sites[p][0] - sites[q][0], sites[p][1] - sites[q][1], sites[p][2] - sites[q][2]};
            e += W[p] * W[q] * discrete_kernel(spectrum, d, A, ZeroMode::kExcluded);
        }
    }
    return e;
}

double fast_creation_energy(double mu, double self_term) {
    return mu + 4.0 * std::abs(self_term);
}

double bose(double eps, double beta) {
    return 1.0 / std::expm1(beta * eps);
}

double wavevector_norm(const std::array<int, 3>& q, int Lambda) {
    double s = 0.0;
    for (int c : q) {
        int w = wrap(c, Lambda);
        w = std::min(w, Lambda - w);
        double k = 2.0 * pi * w / Lambda;
        s += k * k;
    }
    return std::sqrt(s);
}

double susceptibility(const std::array<int, 3>& q, double beta, double t, int Lambda, ZeroMode mode) {
    if (!(beta > 0)) {
        throw ParameterError("beta must be positive");
    }
    BathSpectrum spectrum(t, Lambda);
    const int n = Lambda;
    if (wrap(q[0], n) == 0 && wrap(q[1], n) == 0 && wrap(q[2], n) == 0) {
        throw ParameterError("susceptibility is undefined at q = 0");
    }
    double sum = 0.0;
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            for (int c = 0; c < n; c++) {
                double ek = spectrum.energy(a, b, c);
                double ekq = spectrum.energy(a + q[0], b + q[1], c + q[2]);
                if (ek <= 0.0 || ekq <= 0.0) {
                    continue;
                }
                double nk = bose(ek, beta);
                double d = ekq - ek;
                if (std::abs(d) <= 1e-12 * (1.0 + ek)) {
                    sum += beta * nk * (nk + 1.0);
                } else {
                    sum += (nk - bose(ekq, beta)) / d;
                }
            }
        }
    }
    double chi = sum / spectrum.num_modes();
    if (mode == ZeroMode::kCompensated) {
        double eq = spectrum.energy(q[0], q[1], q[2]);
        chi += 2.0 * (1.0 / beta) / eq * kCubicMadelung / (4.0 * pi * t * n);
    }
    return chi;
}

std::vector<double> density_spectrum(const BathLattice& bath, const std::vector<int>& W, const DensityOracleParams& p) {
    const int n = bath.side();
    const int N = bath.num_sites();
    if (N > 10000) {
        throw SizeError("density oracle limited to 10^4 bath sites");
    }
    if (W.size() != bath.sites().size()) {
        throw ParameterError("W must have one entry per stabilizer");
    }
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(N, N);
    for (int x = 0; x < n; x++) {
        for (int y = 0; y < n; y++) {
            for (int z = 0; z < n; z++) {
                int i = bath.linear_index({x, y, z});
                H(i, i) += 6.0 * p.t + p.m;
                for (const auto& d : {std::array<int, 3>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
                    int j = bath.linear_index({x + d[0], y + d[1], z + d[2]});
                    H(i, j) -= p.t;
                    H(j, i) -= p.t;
                }
            }
        }
    }
    for (size_t q = 0; q < W.size(); q++) {
        int i = bath.linear_index(bath.site_of(static_cast<int>(q)));
        H(i, i) += p.A * W[q];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw SpectrumError("eigensolver failed");
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double density_free_energy(const BathLattice& bath, const std::vector<int>& W, const DensityOracleParams& p) {
    auto lambda = density_spectrum(bath, W, p);
    double f = 0.0;
    for (double l : lambda) {
        if (!(l > 0)) {
            throw SpectrumError("non-positive single-particle level " + std::to_string(l) +
                                "; raise the chemical offset m");
        }
        f += std::log(-std::expm1(-p.beta * l));
    }
    return f / p.beta;
}

DensityAnyonCost density_anyon_cost(const BathLattice& bath, int q, const DensityOracleParams& p) {
    const int n = static_cast<int>(bath.sites().size());
    std::vector<int> vac(n, 1);
    std::vector<int> one = vac;
    one[q] = -1;
    DensityOracleParams flipped = p;
    flipped.A = -p.A;
    double plus = density_free_energy(bath, one, p) - density_free_energy(bath, vac, p);
    double minus = density_free_energy(bath, one, flipped) - density_free_energy(bath, vac, flipped);

    DensityAnyonCost out;
    out.raw = plus;
    out.second_order = 0.5 * (plus + minus);
    double s = 0.0;
    for (int r = 0; r < n; r++) {
        if (r != q) {
            double d = bath.distance(q, r);
            s += 1.0 / (d * d);
        }
    }
    double T = 1.0 / p.beta;
    out.prediction = p.A * p.A * T / (8.0 * pi * pi * p.t * p.t) * s;
    return out;
}

double sigma_fast(double A, double beta, double t) {
    if (!(beta > 0) || !(t > 0)) {
        throw ParameterError("sigma_fast needs beta, t > 0");
    }
    return 2.0 * A * std::sqrt(1.0 + kZeta3Over2 / (4.0 * std::pow(pi * beta * t, 1.5)));
}

double moment(int n, double A, double beta, double t) {
    if (n < 1) {
        throw ParameterError("moment order must be >= 1");
    }
    if (n % 2 != 0) {
        return 0.0;
    }
    if (n == 2) {
        return sigma_fast(A, beta, t);
    }
    double log_ratio = std::lgamma(n + 1.0) - std::lgamma(n / 2 + 1.0);
    return std::sqrt(2.0) * A * std::exp(log_ratio / n) *
           std::sqrt(1.0 + kZeta3Over2 / (4.0 * std::pow(pi * beta * t, 1.5)));
}

namespace {

long double factorial(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; i++) {
        f *= i;
    }
    return f;
}

long double wick_abs_sum(int n, long double xi) {
    long double s = 0.0L;
    for (int k = 0; k <= n; k++) {
        for (int r = 0; 2 * r <= n - k; r++) {
            s += std::pow(xi, r) / (factorial(k) * factorial(r) * factorial(n - k - 2 * r));
        }
    }
    return s;
}

}  // namespace

long double wick_double_sum(int n, long double xi) {
    long double s = 0.0L;
    for (int k = 0; k <= n; k++) {
        long double sign = k % 2 == 0 ? 1.0L : -1.0L;
        for (int r = 0; 2 * r <= n - k; r++) {
            s += sign * std::pow(xi, r) / (factorial(k) * factorial(r) * factorial(n - k - 2 * r));
        }
    }
    return s;
}

long double wick_closed_form(int n, long double xi) {
    if (n % 2 != 0) {
        return 0.0L;
    }
    return std::pow(xi, n / 2) / factorial(n / 2);
}

bool wick_identity_check(int n, double xi, double tol) {
    if (n < 1 || n > 20 || !(xi > 0)) {
        throw ParameterError("wick_identity_check needs 1 <= n <= 20 and xi > 0");
    }
    long double lhs = wick_double_sum(n, xi);
    long double rhs = wick_closed_form(n, xi);
    if (n % 2 != 0) {
        return std::abs(lhs) <= tol * wick_abs_sum(n, xi);
    }
    return std::abs(lhs - rhs) <= tol * std::abs(rhs);
}

}  // namespace tcbath
