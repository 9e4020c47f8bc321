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


#include "tcbath/experiments.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "tcbath/bath.h"
#include "tcbath/decoder.h"
#include "tcbath/dynamics.h"
#include "tcbath/energetics.h"
#include "tcbath/ensemble.h"
#include "tcbath/error.h"
#include "tcbath/meanfield.h"
#include "tcbath/stats.h"

namespace tcbath {

using nlohmann::json;
using std::numbers::pi;

namespace {

template <typename T>
T opt(const json& options, const char* key, T fallback) {
    if (!options.contains(key)) {
        return fallback;
    }
    try {
        return options.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("option '") + key + "' has the wrong type");
    }
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

json fit_json(const LinearFit& f) {
    return {{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}};
}

/// Owns the output directory and stamps every file with the run header.
class Sink {
   public:
    explicit Sink(const RunConfig& config) : config_(config), dir_(config.out) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec || !std::filesystem::is_directory(dir_)) {
            throw OutputError("cannot create output directory '" + config.out + "'");
        }
    }

    std::ofstream csv(const std::string& name, const std::string& columns) {
        auto out = open(name);
        out << "# tcbath " << kVersion << "\n";
        out << "# config " << to_json(config_).dump() << "\n";
        out << "# seed " << seed_text() << "\n";
        out << columns << "\n";
        out << std::setprecision(17);
        return out;
    }

    void write_json(const std::string& name, json body) {
        json doc;
        doc["header"] = {{"version", kVersion}, {"config", to_json(config_)}, {"seed", seed_json()}};
        for (auto& [k, v] : body.items()) {
            doc[k] = v;
        }
        auto out = open(name);
        out << doc.dump(2) << "\n";
        check(out, name);
    }

    void check(std::ofstream& out, const std::string& name) {
        out.flush();
        if (!out) {
            throw OutputError("failed writing '" + (dir_ / name).string() + "'");
        }
    }

    const std::vector<std::string>& files() const {
        return files_;
    }

   private:
    std::ofstream open(const std::string& name) {
        auto path = dir_ / name;
        std::ofstream out(path);
        if (!out) {
            throw OutputError("cannot open '" + path.string() + "' for writing");
        }
        files_.push_back(path.string());
        return out;
    }
    std::string seed_text() const {
        return config_.seed ? std::to_string(*config_.seed) : "none";
    }
    json seed_json() const {
        return config_.seed ? json(*config_.seed) : json(nullptr);
    }

    const RunConfig& config_;
    std::filesystem::path dir_;
    std::vector<std::string> files_;
};

ModelParams with_size(ModelParams p, int L) {
    p.L = L;
    return p;
}

json run_sum_scan(const RunConfig& c, Sink& sink) {
    auto Ls = opt<std::vector<int>>(c.options, "L_values", {8, 16, 32, 64});
    auto out = sink.csv("sum_scan.csv", "L,sum_inverse_r,sum_inverse_r2");
    std::vector<double> x, y1, y2;
    for (int L : Ls) {
        double s1 = lattice_sum_inverse_r(L, 1);
        double s2 = lattice_sum_inverse_r(L, 2);
        out << L << "," << s1 << "," << s2 << "\n";
        x.push_back(L);
        y1.push_back(s1);
        y2.push_back(s2);
    }
    sink.check(out, "sum_scan.csv");
    json s;
    if (x.size() >= 2) {
        LinearFit f = fit_line(x, y1);
        s["fit_inverse_r"] = fit_json(f);
        s["slope_over_2c"] = f.slope / (2.0 * square_inverse_r_constant());
    }
    return s;
}

json run_kernel(const RunConfig& c, Sink& sink) {
    CodeLattice lattice(c.params.L);
    auto pattern = make_pattern(lattice, c);
    InteractionKernel kernel(lattice, pattern, c.params);
    auto pairs = sink.csv("kernel.csv", "p,q,r,J");
    for (int p = 0; p < lattice.num_stabilizers(); p++) {
        for (int q = p + 1; q < lattice.num_stabilizers(); q++) {
            pairs << p << "," << q << "," << planar_distance(lattice, p, q) << "," << kernel.pair(p, q) << "\n";
        }
    }
    sink.check(pairs, "kernel.csv");
    auto mu = sink.csv("mu.csv", "q,species,col,row,amplitude,mu,self_term");
    for (int q = 0; q < lattice.num_stabilizers(); q++) {
        const auto& s = lattice.stabilizer(q);
        mu << q << "," << species_name(s.species) << "," << s.col << "," << s.row << "," << kernel.amplitude(q)
           << "," << kernel.mu(q) << "," << kernel.self_term(q) << "\n";
    }
    sink.check(mu, "mu.csv");
    return {{"mu_center", kernel.mu(lattice.center_stabilizer())},
            {"mu_corner", kernel.mu(lattice.corner_stabilizer())},
            {"max_abs_pair", kernel.max_abs_pair()}};
}

json run_mu_scan(const RunConfig& c, Sink& sink) {
    auto Ls = opt<std::vector<int>>(c.options, "L_values", {8, 16, 32, 64});
    auto out = sink.csv("mu_scan.csv", "L,mu_center,mu_center_t_over_A2L");
    std::vector<double> x, y;
    const double A = c.params.A;
    const double t = c.params.t;
    for (int L : Ls) {
        CodeLattice lattice(L);
        InteractionKernel kernel(lattice, uniform_pattern(lattice, A), with_size(c.params, L));
        double mu = kernel.mu(lattice.center_stabilizer());
        out << L << "," << mu << "," << mu * t / (A * A * L) << "\n";
        x.push_back(L);
        y.push_back(mu);
    }
    sink.check(out, "mu_scan.csv");
    json s;
    if (x.size() >= 2) {
        LinearFit f = fit_line(x, y);
        s["fit"] = fit_json(f);
        s["slope_t_over_A2"] = f.slope * t / (A * A);
    }
    return s;
}

json run_oracle_displacement(const RunConfig& c, Sink& sink) {
    auto Lambdas = opt<std::vector<int>>(c.options, "Lambda_values", {16, 24, 32});
    auto seps = opt<std::vector<std::array<int, 3>>>(
        c.options, "separations", {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}, {5, 0, 0}, {3, 4, 0}});
    const double A = c.params.A;
    const double t = c.params.t;
    auto out = sink.csv("oracle_displacement.csv",
                        "Lambda,dx,dy,dz,r,discrete_excluded,discrete_compensated,continuum,relative_deviation");
    for (int Lambda : Lambdas) {
        BathSpectrum spectrum(t, Lambda);
        for (const auto& d : seps) {
            double r = std::sqrt(double(d[0]) * d[0] + double(d[1]) * d[1] + double(d[2]) * d[2]);
            double ex = discrete_kernel(spectrum, d, A, ZeroMode::kExcluded);
            double comp = discrete_kernel(spectrum, d, A, ZeroMode::kCompensated);
            double cont = r > 0 ? kernel_displacement(r, A, A, t) : -kSelfTermCoefficient * A * A / t;
            out << Lambda << "," << d[0] << "," << d[1] << "," << d[2] << "," << r << "," << ex << "," << comp << ","
                << cont << "," << std::abs(comp - cont) / std::abs(cont) << "\n";
        }
    }
    sink.check(out, "oracle_displacement.csv");

    // Sector-energy identity on a random anyon pattern of a small embedded patch.
    int L = opt<int>(c.options, "identity_L", 4);
    int Lambda = std::max(8, 2 * L);
    CodeLattice lattice(L);
    BathLattice bath(lattice, Lambda);
    BathSpectrum spectrum(t, Lambda);
    Rng rng(c.seed.value_or(1));
    std::vector<int> W(lattice.num_stabilizers());
    for (int& w : W) {
        w = rng.below(2) ? 1 : -1;
    }
    double sector = displacement_sector_energy(spectrum, bath.sites(), W, A);
    double pairs = displacement_pair_energy(spectrum, bath.sites(), W, A);
    return {{"identity_L", L},
            {"identity_Lambda", Lambda},
            {"sector_energy", sector},
            {"pair_energy", pairs},
            {"identity_difference", sector - pairs}};
}

json run_oracle_density(const RunConfig& c, Sink& sink) {
    DensityOracleParams p;
    p.A = opt(c.options, "A", p.A);
    p.t = opt(c.options, "t", p.t);
    p.beta = opt(c.options, "beta", p.beta);
    p.m = opt(c.options, "m", p.m);
    int Lambda = opt(c.options, "Lambda", 8);
    if (!(p.A > 0) || !(p.t > 0) || !(p.beta > 0) || !(p.m > 0)) {
        throw ParameterError("density oracle needs positive A, t, beta and m");
    }
    CodeLattice lattice(c.params.L);
    BathLattice bath(lattice, Lambda);
    int q = opt(c.options, "site", lattice.center_stabilizer());
    if (q < 0 || q >= lattice.num_stabilizers()) {
        throw ParameterError("oracle site out of range");
    }
    DensityAnyonCost cost = density_anyon_cost(bath, q, p);
    auto out = sink.csv("oracle_density.csv", "q,raw,second_order,prediction,ratio");
    out << q << "," << cost.raw << "," << cost.second_order << "," << cost.prediction << ","
        << cost.second_order / cost.prediction << "\n";
    sink.check(out, "oracle_density.csv");
    if (opt(c.options, "dump_eigenvalues", false)) {
        std::vector<int> W(lattice.num_stabilizers(), 1);
        auto ev = sink.csv("eigenvalues_vacuum.csv", "index,lambda");
        auto spectrum = density_spectrum(bath, W, p);
        for (size_t i = 0; i < spectrum.size(); i++) {
            ev << i << "," << spectrum[i] << "\n";
        }
        sink.check(ev, "eigenvalues_vacuum.csv");
    }
    return {{"raw", cost.raw},
            {"second_order", cost.second_order},
            {"prediction", cost.prediction},
            {"ratio", cost.second_order / cost.prediction}};
}

json run_chi(const RunConfig& c, Sink& sink) {
    int Lambda = opt(c.options, "Lambda", 32);
    auto qs = opt<std::vector<std::array<int, 3>>>(c.options, "q_values", {{1, 0, 0}, {2, 0, 0}, {1, 1, 0}});
    const double beta = c.params.beta;
    const double t = c.params.t;
    auto out = sink.csv("chi.csv", "qx,qy,qz,q_norm,chi,chi_excluded,chi_8t2q_over_T");
    json rows = json::array();
    for (const auto& q : qs) {
        double norm = wavevector_norm(q, Lambda);
        double chi = susceptibility(q, beta, t, Lambda, ZeroMode::kCompensated);
        double ex = susceptibility(q, beta, t, Lambda, ZeroMode::kExcluded);
        double scaled = chi * 8.0 * t * t * norm * beta;
        out << q[0] << "," << q[1] << "," << q[2] << "," << norm << "," << chi << "," << ex << "," << scaled << "\n";
        rows.push_back(scaled);
    }
    sink.check(out, "chi.csv");
    return {{"scaled", rows}};
}

json run_moments(const RunConfig& c, Sink& sink) {
    int n_max = opt(c.options, "n_max", 20);
    double xi = opt(c.options, "xi", 0.7);
    if (n_max < 1 || n_max > 20) {
        throw ParameterError("n_max must lie in [1, 20]");
    }
    const double A = c.params.A;
    const double beta = c.params.beta;
    const double t = c.params.t;
    auto out = sink.csv("moments.csv", "n,C_n,wick_sum,wick_closed,identity_ok");
    bool all_ok = true;
    for (int n = 1; n <= n_max; n++) {
        bool ok = wick_identity_check(n, xi);
        all_ok = all_ok && ok;
        out << n << "," << moment(n, A, beta, t) << "," << num(double(wick_double_sum(n, xi))) << ","
            << num(double(wick_closed_form(n, xi))) << "," << (ok ? 1 : 0) << "\n";
    }
    sink.check(out, "moments.csv");
    return {{"sigma_fast", sigma_fast(A, beta, t)}, {"wick_identity", all_ok}};
}

json run_meanfield(const RunConfig& c, Sink& sink) {
    std::vector<double> fallback;
    for (int i = 1; i <= 12; i++) {
        fallback.push_back(0.5 * i);
    }
    auto grid = opt(c.options, "beta_delta0_values", fallback);
    auto out = sink.csv("meanfield.csv", "beta_delta0,regime,num_roots,roots,stable");
    for (double b : grid) {
        auto sol = solve_self_consistent(b, c.tolerance);
        out << b << "," << regime_name(sol.regime) << "," << sol.roots.size() << ",";
        for (size_t i = 0; i < sol.roots.size(); i++) {
            out << (i ? ";" : "") << sol.roots[i];
        }
        out << ",";
        for (size_t i = 0; i < sol.stable.size(); i++) {
            out << (i ? ";" : "") << (sol.stable[i] ? 1 : 0);
        }
        out << "\n";
    }
    sink.check(out, "meanfield.csv");
    return {{"points", grid.size()}};
}

json run_simulate(const RunConfig& c, Sink& sink) {
    CodeLattice lattice(c.params.L);
    auto pattern = make_pattern(lattice, c);
    auto betas = opt<std::vector<double>>(c.options, "beta_values", {c.params.beta});
    bool record_events = opt(c.options, "record_events", false);
    LifetimeOptions lo;
    lo.horizon = c.horizon;
    lo.max_events = c.max_events;
    lo.decode_stride = c.stride;
    lo.record_events = record_events;

    auto out = sink.csv("trajectories.csv",
                        "beta,beta_delta0,index,seed,lifetime,censored,events,termination,cumulative_delta,"
                        "final_energy");
    std::ofstream events;
    if (record_events) {
        events = sink.csv("events.csv", "beta,index,time,spin,species,delta_e");
    }
    json points = json::array();
    std::vector<double> x, y;
    for (size_t k = 0; k < betas.size(); k++) {
        ModelParams params = c.params;
        params.beta = betas[k];
        params.validate();
        InteractionKernel kernel(lattice, pattern, params);
        double bd0 = params.beta * pair_creation_cost(lattice, kernel, params);
        uint64_t master = derive_seed(*c.seed, k);
        auto summary = run_lifetime_ensemble(lattice, kernel, params, lo, c.ensemble, master);
        for (size_t i = 0; i < summary.runs.size(); i++) {
            const auto& r = summary.runs[i];
            out << params.beta << "," << bd0 << "," << i << "," << r.seed << "," << r.end_time << ","
                << (r.censored() ? 1 : 0) << "," << r.num_events << "," << termination_name(r.termination) << ","
                << r.cumulative_delta << "," << r.final_energy << "\n";
            for (const auto& e : r.events) {
                events << params.beta << "," << i << "," << num(e.time) << "," << e.spin << ","
                       << species_name(e.species) << "," << num(e.delta_e) << "\n";
            }
        }
        points.push_back({{"beta", params.beta},
                          {"beta_delta0", bd0},
                          {"median_lifetime", summary.median_lifetime},
                          {"censored", summary.censored},
                          {"median_reliable", summary.median_reliable()},
                          {"master_seed", master}});
        x.push_back(bd0);
        y.push_back(std::log(summary.median_lifetime));
    }
    sink.check(out, "trajectories.csv");
    if (record_events) {
        sink.check(events, "events.csv");
    }
    json s = {{"points", points}};
    if (x.size() >= 2) {
        s["fit_log_median_vs_beta_delta0"] = fit_json(fit_line(x, y));
    }
    return s;
}

json run_hinder(const RunConfig& c, Sink& sink) {
    CodeLattice lattice(c.params.L);
    if (c.pattern.kind != "square") {
        throw ConfigError("hinder needs the square pattern");
    }
    auto weak_values = opt<std::vector<double>>(c.options, "A_w_values", {c.pattern.A_w});
    std::vector<std::pair<int, int>> seeds = default_hinder_seeds(lattice);
    if (c.options.contains("seeded_pairs")) {
        seeds = opt<std::vector<std::pair<int, int>>>(c.options, "seeded_pairs", {});
    }
    HinderOptions ho;
    ho.horizon = c.horizon;
    ho.max_events = c.max_events;
    auto out = sink.csv("escapes.csv", "A_w,barrier,index,seed,time,censored,events,reason");
    json points = json::array();
    std::vector<double> x, y;
    for (size_t k = 0; k < weak_values.size(); k++) {
        auto pattern = build_pattern_square(lattice, c.pattern.A_s, weak_values[k]);
        InteractionKernel kernel(lattice, pattern, c.params);
        double barrier = (1.0 - weak_values[k] / c.pattern.A_s) * mean_strong_mu(kernel, pattern);
        uint64_t master = derive_seed(*c.seed, k);
        auto summary = run_hindering_ensemble(lattice, kernel, pattern, c.params, seeds, ho, c.ensemble, master);
        for (size_t i = 0; i < summary.runs.size(); i++) {
            const auto& r = summary.runs[i];
            out << weak_values[k] << "," << barrier << "," << i << "," << r.seed << "," << r.time << ","
                << (r.censored() ? 1 : 0) << "," << r.num_events << "," << escape_reason_name(r.reason) << "\n";
        }
        points.push_back({{"A_w", weak_values[k]},
                          {"barrier", barrier},
                          {"beta_barrier", c.params.beta * barrier},
                          {"median_escape_time", summary.median_time},
                          {"censored", summary.censored},
                          {"median_reliable", summary.median_reliable()},
                          {"master_seed", master}});
        x.push_back(barrier);
        y.push_back(std::log(summary.median_time));
    }
    sink.check(out, "escapes.csv");
    json s = {{"points", points}};
    if (x.size() >= 2) {
        s["fit_log_median_vs_barrier"] = fit_json(fit_line(x, y));
    }
    return s;
}

json error_spins(const ErrorSet& e) {
    json out;
    for (Species s : kAllSpecies) {
        json spins = json::array();
        for (size_t i = 0; i < e.flips[index_of(s)].size(); i++) {
            if (e.flips[index_of(s)][i]) {
                spins.push_back(i);
            }
        }
        out[std::string(species_name(s))] = spins;
    }
    return out;
}

json run_decode_test(const RunConfig& c, Sink& sink) {
    CodeLattice lattice(c.params.L);
    ErrorSet error(lattice);
    if (c.options.contains("error")) {
        const json& e = c.options.at("error");
        for (Species s : kAllSpecies) {
            auto spins = opt<std::vector<int>>(e, std::string(species_name(s)).c_str(), {});
            for (int spin : spins) {
                if (spin < 0 || spin >= lattice.num_spins()) {
                    throw ParameterError("error spin out of range");
                }
                error.toggle(spin, s);
            }
        }
    }
    Syndrome syndrome = extract_syndrome(error, lattice);
    Correction correction = decode(syndrome, lattice);
    LogicalFailure lf = is_logical_failure(error, correction, lattice);
    json failure;
    for (int k = 0; k < kNumLogicalClasses; k++) {
        failure[std::string(logical_class_name(static_cast<LogicalClass>(k)))] = lf.classes[k];
    }
    json body = {{"error", error_spins(error)},
                 {"syndrome", {{"e", syndrome.of(Species::kE)}, {"m", syndrome.of(Species::kM)}}},
                 {"correction", error_spins(correction)},
                 {"failure", failure},
                 {"logical_failure", lf.any()}};
    sink.write_json("decode.json", body);
    return {{"logical_failure", lf.any()}, {"anyons", syndrome.of(Species::kE).size() + syndrome.of(Species::kM).size()}};
}

json run_energy(const RunConfig& c, Sink& sink) {
    CodeLattice lattice(c.params.L);
    auto pattern = make_pattern(lattice, c);
    InteractionKernel kernel(lattice, pattern, c.params);
    auto anyons = opt<std::vector<int>>(c.options, "anyons", {});
    for (int q : anyons) {
        if (q < 0 || q >= lattice.num_stabilizers()) {
            throw ParameterError("anyon stabilizer out of range");
        }
    }
    AnyonConfig config(lattice, anyons);
    double e = config_energy(config, kernel);
    json body = {{"anyons", anyons},
                 {"e_count", config.count(Species::kE)},
                 {"m_count", config.count(Species::kM)},
                 {"energy", e}};
    sink.write_json("energy.json", body);
    return {{"energy", e}};
}

json run_lattice(const RunConfig& c, Sink& sink) {
    CodeLattice lattice(c.params.L);
    sink.write_json("lattice.json", {{"lattice", lattice.to_json()}});
    return {{"L", lattice.size()}};
}

}  // namespace

std::vector<std::pair<int, int>> default_hinder_seeds(const CodeLattice& lattice) {
    int L = lattice.size();
    return {{lattice.stabilizer_index(Species::kE, 1, 1), lattice.stabilizer_index(Species::kE, L / 2, L / 2)}};
}

double mean_strong_mu(const InteractionKernel& kernel, const CouplingPattern& pattern) {
    double sum = 0.0;
    int n = 0;
    for (int q = 0; q < kernel.num_stabilizers(); q++) {
        if (!pattern.is_weak(q)) {
            sum += kernel.mu(q);
            n++;
        }
    }
    return n ? sum / n : 0.0;
}

ExperimentResult run_experiment(const RunConfig& config) {
    validate(config);
    Sink sink(config);
    const std::string& e = config.experiment;
    json summary;
    if (e == "sum-scan") {
        summary = run_sum_scan(config, sink);
    } else if (e == "kernel") {
        summary = run_kernel(config, sink);
    } else if (e == "mu-scan") {
        summary = run_mu_scan(config, sink);
    } else if (e == "oracle-displacement") {
        summary = run_oracle_displacement(config, sink);
    } else if (e == "oracle-density") {
        summary = run_oracle_density(config, sink);
    } else if (e == "chi") {
        summary = run_chi(config, sink);
    } else if (e == "moments") {
        summary = run_moments(config, sink);
    } else if (e == "meanfield") {
        summary = run_meanfield(config, sink);
    } else if (e == "simulate") {
        summary = run_simulate(config, sink);
    } else if (e == "hinder") {
        summary = run_hinder(config, sink);
    } else if (e == "decode-test") {
        summary = run_decode_test(config, sink);
    } else if (e == "energy") {
        summary = run_energy(config, sink);
    } else if (e == "lattice") {
        summary = run_lattice(config, sink);
    }
    sink.write_json("summary.json", {{"experiment", e}, {"summary", summary}});
    return {sink.files(), summary};
}

}  // namespace tcbath
