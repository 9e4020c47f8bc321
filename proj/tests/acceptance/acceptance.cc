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


// Acceptance checks, one per numbered criterion. Prints one PASS/FAIL line per
// criterion; `--criterion N` runs a single one.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tcbath/bath.h"
#include "tcbath/couplings.h"
#include "tcbath/decoder.h"
#include "tcbath/dynamics.h"
#include "tcbath/energetics.h"
#include "tcbath/ensemble.h"
#include "tcbath/experiments.h"
#include "tcbath/meanfield.h"
#include "tcbath/stats.h"

namespace tcbath {
namespace {

using std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

ModelParams unit_params(int L) {
    ModelParams p;
    p.L = L;
    return p;
}

Outcome lattice_sum_linearity() {
    std::vector<double> x, y;
    for (int L : {8, 16, 32, 64}) {
        x.push_back(L);
        y.push_back(lattice_sum_inverse_r(L, 1));
    }
    LinearFit f = fit_line(x, y);
    return {f.r_squared > 0.999, "R^2=" + fmt(f.r_squared, 10) + " slope=" + fmt(f.slope)};
}

Outcome chemical_potential() {
    const int L = 64;
    CodeLattice lat(L);
    InteractionKernel k(lat, uniform_pattern(lat, 1.0), unit_params(L));
    double ratio = k.mu(lat.center_stabilizer()) / L;
    return {ratio >= 1.8 && ratio <= 2.2, "mu t/(A^2 L)=" + fmt(ratio) + " at L=64, window [1.8, 2.2]"};
}

Outcome self_interaction() {
    double v = self_term_integral(1.0, 1.0, 128);
    double rel = std::abs(v / -0.253 - 1.0);
    return {rel < 0.02, "J_pp=" + fmt(v) + " A^2/t, deviation " + fmt(100 * rel, 3) + "%"};
}

Outcome kernel_oracle() {
    bool ok = true;
    std::string detail;
    for (int r = 3; r <= 5; r++) {
        double cont = kernel_displacement(r, 1, 1, 1);
        double prev = 1e9;
        detail += "r=" + std::to_string(r) + ":";
        for (int n : {16, 24, 32}) {
            BathSpectrum s(1.0, n);
            double dev = std::abs(discrete_kernel(s, {r, 0, 0}, 1.0) / cont - 1.0);
            if (n == 24 && dev > 0.10) {
                ok = false;
            }
            if (dev >= prev) {
                ok = false;
            }
            prev = dev;
            detail += " " + fmt(100 * dev, 3) + "%";
        }
        detail += "; ";
    }
    return {ok, detail + "Lambda 16/24/32"};
}

Outcome fast_vs_slow() {
    bool ok = true;
    std::string detail;
    double first = 0.0;
    for (int L : {8, 16, 32}) {
        CodeLattice lat(L);
        InteractionKernel k(lat, uniform_pattern(lat, 1.0), unit_params(L));
        int c = lat.center_stabilizer();
        double diff = fast_creation_energy(k.mu(c), k.self_term(c)) - k.mu(c);
        // Subtracting mu back out leaves rounding at the scale of mu.
        double ulps = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(k.mu(c));
        ok = ok && std::abs(diff - 4.0 * std::abs(k.self_term(c))) <= ulps;
        if (L == 8) {
            first = diff;
        }
        ok = ok && std::abs(diff - first) <= ulps;
        detail += "L=" + std::to_string(L) + ": " + fmt(diff, 12) + " ";
    }
    return {ok, detail + "(4|J_pp| = " + fmt(4 * 0.253, 12) + ")"};
}

Outcome susceptibility_asymptote() {
    const double beta = 0.05, t = 1.0;
    const int n = 32;
    bool ok = true;
    std::string detail;
    for (std::array<int, 3> q : {std::array<int, 3>{1, 0, 0}, {1, 1, 0}}) {
        double scaled = susceptibility(q, beta, t, n) * 8 * t * t * wavevector_norm(q, n) * beta;
        ok = ok && scaled >= 0.85 && scaled <= 1.15;
        detail += fmt(scaled) + " ";
    }
    return {ok, "chi 8t^2|q|/T at the two smallest |q|: " + detail};
}

Outcome density_sign_order() {
    CodeLattice lat(4);
    BathLattice bath(lat, 8);
    auto cost = density_anyon_cost(bath, lat.center_stabilizer(), DensityOracleParams{});
    double ratio = cost.second_order / cost.prediction;
    bool ok = cost.second_order > 0 && ratio >= 0.5 && ratio <= 2.0;
    return {ok, "dF=" + fmt(cost.second_order) + " prediction=" + fmt(cost.prediction) + " ratio=" + fmt(ratio)};
}

Outcome mean_field() {
    bool ok = true;
    for (double b = 0.1; b < 2.0; b += 0.1) {
        auto s = solve_self_consistent(b);
        ok = ok && s.roots.size() == 1 && s.roots[0] == 0.5 && s.stable[0];
    }
    for (double b = 2.1; b <= 12.0; b += 0.1) {
        auto s = solve_self_consistent(b);
        ok = ok && s.roots.size() == 3 && s.stable[0] && !s.stable[1] && s.stable[2];
    }
    double nstar = solve_self_consistent(10.0).roots[0];
    ok = ok && nstar < 2 * std::exp(-10.0);
    double worst = 0.0;
    for (int L : {8, 10, 16}) {
        double sum = 0.0;
        for (int N = 0; N <= L * L / 2; N++) {
            worst = std::max(worst, std::abs(mf_energy(N, 1.3, L) - mf_energy(L * L / 2.0 - N, 1.3, L)));
            if (N <= 20) {
                worst = std::max(worst, std::abs(mf_energy(N, 1.3, L) - sum));
                sum += delta_N(N, 1.3, L);
            }
        }
    }
    ok = ok && worst <= 1e-12;
    return {ok, "n*(10)=" + fmt(nstar) + " identity residual " + fmt(worst, 3)};
}

Outcome moments_check() {
    bool ok = moment(2, 1.0, 1.0, 1.0) == sigma_fast(1.0, 1.0, 1.0);
    for (int n = 1; n <= 19; n += 2) {
        ok = ok && moment(n, 1.0, 1.0, 1.0) == 0.0;
    }
    for (int n = 1; n <= 20; n++) {
        for (double xi : {0.3, 0.7, 1.0, 3.0}) {
            ok = ok && wick_identity_check(n, xi, 1e-10);
        }
    }
    return {ok, "sigma_fast(beta t=1)=" + fmt(sigma_fast(1, 1, 1)) + ", Wick n<=20"};
}

// One creation/annihilation channel: the dwell-time ratio of the pair state
// to the vacuum estimates exp(-beta dE); errors from batch means.
Outcome detailed_balance() {
    const int L = 4;
    const long events = 100000;
    const int batches = 50;
    const double beta = 1.0;
    bool ok = true;
    std::string detail;
    CodeLattice lat(L);
    int spin = lat.horizontal_spin(1, 1);
    for (double target : {0.5, 1.0, 2.0}) {
        ModelParams p = unit_params(L);
        InteractionKernel k1(lat, uniform_pattern(lat, 1.0), p);
        const auto& pr = lat.toggled_by(spin, Species::kE);
        double d1 = k1.mu(pr[0]) + k1.mu(pr[1]) + 8 * k1.pair(pr[0], pr[1]);
        p.A = std::sqrt(target / d1);
        p.beta = beta;
        InteractionKernel k(lat, uniform_pattern(lat, p.A), p);
        KmcEngine engine(lat, k, {}, beta, 1234 + static_cast<uint64_t>(100 * target));
        std::vector<uint8_t> mask(engine.num_processes(), 0);
        mask[2 * spin + index_of(Species::kE)] = 1;
        engine.set_process_mask(mask);
        double dE = engine.process_delta(2 * spin);
        std::vector<double> t_pair(batches, 0.0), t_vac(batches, 0.0);
        double prev = 0.0;
        for (long e = 0; e < events; e++) {
            bool pair = engine.config().total() > 0;
            Event ev = engine.step();
            int b = static_cast<int>(e * batches / events);
            (pair ? t_pair : t_vac)[b] += ev.time - prev;
            prev = ev.time;
        }
        double tp = 0.0, tv = 0.0;
        std::vector<double> ratios;
        for (int b = 0; b < batches; b++) {
            tp += t_pair[b];
            tv += t_vac[b];
            ratios.push_back(t_pair[b] / t_vac[b]);
        }
        double m = mean(ratios);
        double var = 0.0;
        for (double r : ratios) {
            var += (r - m) * (r - m);
        }
        double sigma = std::sqrt(var / (batches - 1) / batches);
        double ratio = tp / tv;
        double expected = std::exp(-beta * dE);
        double z = (ratio - expected) / sigma;
        ok = ok && std::abs(z) <= 3.0;
        detail += "dE=" + fmt(dE, 4) + ": " + fmt(ratio, 5) + " vs " + fmt(expected, 5) + " (" + fmt(z, 2) +
                  " sigma); ";
    }
    return {ok, detail};
}

Outcome lifetime_scaling() {
    const int L = 8;
    const int seeds = 100;
    CodeLattice lat(L);
    ModelParams p = unit_params(L);
    InteractionKernel k(lat, uniform_pattern(lat, 1.0), p);
    double delta0 = pair_creation_cost(lat, k, p);
    LifetimeOptions o;
    std::vector<double> x, y;
    bool monotone = true;
    std::string detail;
    for (double bd : {2.0, 3.0, 4.0, 5.0}) {
        p.beta = bd / delta0;
        auto s = run_lifetime_ensemble(lat, k, p, o, seeds, derive_seed(2024, static_cast<uint64_t>(bd)));
        if (!y.empty() && std::log(s.median_lifetime) <= y.back()) {
            monotone = false;
        }
        monotone = monotone && s.median_reliable();
        x.push_back(bd);
        y.push_back(std::log(s.median_lifetime));
        detail += fmt(s.median_lifetime, 4) + " ";
    }
    LinearFit f = fit_line(x, y);
    bool ok = monotone && f.slope >= 0.7 && f.slope <= 1.3;
    return {ok, "medians " + detail + "slope=" + fmt(f.slope, 4) + " (window [0.7, 1.3]) monotone=" +
                    (monotone ? "yes" : "no")};
}

Outcome hindering() {
    const int L = 8;
    CodeLattice lat(L);
    auto valid_pattern = build_pattern_square(lat, 1.0, 0.5);
    bool valid = pattern_violations(lat, valid_pattern).empty();
    ModelParams p = unit_params(L);
    p.beta = 1.5;
    HinderOptions o;
    auto seeds = default_hinder_seeds(lat);
    std::vector<double> x, y;
    bool reliable = true;
    std::string detail;
    for (double aw : {0.9, 0.85, 0.8}) {
        auto pattern = build_pattern_square(lat, 1.0, aw);
        InteractionKernel k(lat, pattern, p);
        double barrier = (1.0 - aw) * mean_strong_mu(k, pattern);
        auto s = run_hindering_ensemble(lat, k, pattern, p, seeds, o, 200,
                                        derive_seed(77, static_cast<uint64_t>(100 * aw)));
        reliable = reliable && s.median_reliable();
        x.push_back(barrier);
        y.push_back(std::log(s.median_time));
        detail += "barrier " + fmt(barrier, 4) + " -> " + fmt(s.median_time, 4) + "; ";
    }
    LinearFit f = fit_line(x, y);
    bool ok = valid && reliable && f.slope > 0 && f.r_squared > 0.9;
    return {ok, detail + "slope=" + fmt(f.slope, 4) + " R^2=" + fmt(f.r_squared, 4) +
                    " pattern valid=" + (valid ? "yes" : "no")};
}

int brute_min_weight(const std::vector<int>& anyons, std::vector<bool>& used, const CodeLattice& lat) {
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
            best = std::min(best, toroidal_path_length(lat, anyons[i], anyons[j]) + brute_min_weight(anyons, used, lat));
            used[j] = false;
        }
    }
    used[i] = false;
    return best;
}

Outcome decoder_check() {
    CodeLattice lat(8);
    std::mt19937_64 gen(13);
    int mismatches = 0;
    for (int trial = 0; trial < 100; trial++) {
        int count = 2 * (1 + static_cast<int>(gen() % 4));
        std::vector<int> pool;
        for (int q = 0; q < lat.num_stabilizers() / 2; q++) {
            pool.push_back(q + (trial % 2) * lat.num_stabilizers() / 2);
        }
        std::shuffle(pool.begin(), pool.end(), gen);
        pool.resize(count);
        std::sort(pool.begin(), pool.end());
        std::vector<bool> used(pool.size(), false);
        mismatches += matching_weight(pool, exact_matching(pool, lat), lat) != brute_min_weight(pool, used, lat);
    }
    int failures = 0;
    for (int trial = 0; trial < 100; trial++) {
        ErrorSet e(lat);
        int flips = 1 + static_cast<int>(gen() % 12);
        for (int k = 0; k < flips; k++) {
            e.toggle(static_cast<int>(gen() % lat.num_spins()), gen() % 2 ? Species::kE : Species::kM);
        }
        failures += is_logical_failure(e, e, lat).any();
    }
    return {mismatches == 0 && failures == 0,
            std::to_string(mismatches) + " weight mismatches, " + std::to_string(failures) + " false failures"};
}

Outcome bookkeeping() {
    std::mt19937_64 gen(99);
    double worst = 0.0;
    for (int trial = 0; trial < 20; trial++) {
        int L = 4 + 2 * static_cast<int>(gen() % 3);
        CodeLattice lat(L);
        ModelParams p = unit_params(L);
        p.A = 0.5 + (gen() % 1000) / 1000.0;
        p.rate_law = static_cast<RateLawKind>(gen() % 3);
        InteractionKernel k(lat, uniform_pattern(lat, p.A), p);
        double delta0 = pair_creation_cost(lat, k, p);
        p.beta = (1.0 + 3.0 * (gen() % 1000) / 1000.0) / delta0;
        KmcEngine engine(lat, k, {p.rate_law, p.gamma0}, p.beta, gen());
        for (int e = 0; e < 5000; e++) {
            engine.step();
        }
        double final_energy = config_energy(engine.config(), k);
        double rel = std::abs(engine.cumulative_delta() - final_energy) / std::max(1.0, std::abs(final_energy));
        worst = std::max(worst, rel);
    }
    return {worst <= 1e-6, "worst relative mismatch " + fmt(worst, 3) + " over 20 trajectories"};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace
}  // namespace tcbath

int main(int argc, char** argv) {
    using namespace tcbath;
    CLI::App app{"Acceptance checks"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-14)");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "lattice-sum linearity", 10, lattice_sum_linearity},
        {2, "chemical potential at L=64", 10, chemical_potential},
        {3, "self-interaction constant", 10, self_interaction},
        {4, "kernel oracle equivalence", 60, kernel_oracle},
        {5, "fast vs slow creation", 30, fast_vs_slow},
        {6, "susceptibility asymptote", 60, susceptibility_asymptote},
        {7, "density coupling sign and order", 120, density_sign_order},
        {8, "mean field", 5, mean_field},
        {9, "moments", 5, moments_check},
        {10, "detailed balance", 60, detailed_balance},
        {11, "lifetime scaling", 1800, lifetime_scaling},
        {12, "hindering", 1800, hindering},
        {13, "decoder", 60, decoder_check},
        {14, "KMC energy bookkeeping", 60, bookkeeping},
    };
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "error: code=64 msg=\"criterion must lie in [1, 14]\"\n";
        return 64;
    }
    bool all = true;
    for (const auto& c : criteria) {
        if (only && c.id != only) {
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = o.pass && in_time;
        all = all && pass;
        std::cout << "criterion " << c.id << " [" << c.name << "]: " << (pass ? "PASS" : "FAIL") << " - " << o.detail
                  << " (" << fmt(secs, 3) << " s" << (in_time ? "" : ", over time limit") << ")" << std::endl;
    }
    return all ? 0 : 1;
}
