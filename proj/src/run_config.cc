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


#include "tcbath/run_config.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "tcbath/error.h"

namespace tcbath {

using nlohmann::json;

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "sum-scan", "kernel", "mu-scan", "oracle-displacement", "oracle-density", "chi", "moments",
        "meanfield", "simulate", "hinder", "decode-test", "energy", "lattice"};
    return names;
}

bool is_stochastic(std::string_view experiment) {
    return experiment == "simulate" || experiment == "hinder";
}

namespace {

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
        throw ConfigError(std::string(where) + " must be a JSON object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in " + std::string(where));
        }
    }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
    if (!obj.contains(key)) {
        return;
    }
    const json& v = obj.at(key);
    bool ok;
    if constexpr (std::is_same_v<T, std::string>) {
        ok = v.is_string();
    } else if constexpr (std::is_same_v<T, uint64_t>) {
        ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<int64_t>() >= 0);
    } else if constexpr (std::is_integral_v<T>) {
        ok = v.is_number_integer();
    } else {
        ok = v.is_number();
    }
    if (!ok) {
        throw ConfigError(std::string("key '") + key + "' has the wrong type");
    }
    out = v.get<T>();
}

ModelParams parse_params(const json& obj) {
    check_keys(obj, "params", {"A", "t", "beta", "L", "Lambda", "coupling", "gamma0", "rate_law"});
    ModelParams p;
    read(obj, "A", p.A);
    read(obj, "t", p.t);
    read(obj, "beta", p.beta);
    read(obj, "L", p.L);
    read(obj, "Lambda", p.Lambda);
    read(obj, "gamma0", p.gamma0);
    std::string name;
    if (obj.contains("coupling")) {
        read(obj, "coupling", name);
        p.coupling = parse_coupling_kind(name);
    }
    if (obj.contains("rate_law")) {
        read(obj, "rate_law", name);
        p.rate_law = parse_rate_law(name);
    }
    return p;
}

}  // namespace

RunConfig parse_run_config(const json& doc) {
    check_keys(doc, "config",
               {"experiment", "params", "pattern", "ensemble", "horizon", "max_events", "seed", "out", "stride",
                "tolerance", "options"});
    RunConfig c;
    if (!doc.contains("experiment")) {
        throw ConfigError("config needs an 'experiment' key");
    }
    read(doc, "experiment", c.experiment);
    if (doc.contains("params")) {
        c.params = parse_params(doc.at("params"));
    }
    if (doc.contains("pattern")) {
        const json& pat = doc.at("pattern");
        check_keys(pat, "pattern", {"kind", "A_s", "A_w"});
        read(pat, "kind", c.pattern.kind);
        read(pat, "A_s", c.pattern.A_s);
        read(pat, "A_w", c.pattern.A_w);
    }
    read(doc, "ensemble", c.ensemble);
    read(doc, "horizon", c.horizon);
    read(doc, "max_events", c.max_events);
    if (doc.contains("seed")) {
        uint64_t s = 0;
        read(doc, "seed", s);
        c.seed = s;
    }
    read(doc, "out", c.out);
    read(doc, "stride", c.stride);
    read(doc, "tolerance", c.tolerance);
    if (doc.contains("options")) {
        if (!doc.at("options").is_object()) {
            throw ConfigError("options must be a JSON object");
        }
        c.options = doc.at("options");
    }
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_run_config(doc);
}

json to_json(const RunConfig& c) {
    json doc;
    doc["experiment"] = c.experiment;
    doc["params"] = {{"A", c.params.A},
                     {"t", c.params.t},
                     {"beta", c.params.beta},
                     {"L", c.params.L},
                     {"Lambda", c.params.Lambda},
                     {"coupling", coupling_kind_name(c.params.coupling)},
                     {"gamma0", c.params.gamma0},
                     {"rate_law", rate_law_name(c.params.rate_law)}};
    doc["pattern"] = {{"kind", c.pattern.kind}, {"A_s", c.pattern.A_s}, {"A_w", c.pattern.A_w}};
    doc["ensemble"] = c.ensemble;
    doc["horizon"] = c.horizon;
    doc["max_events"] = c.max_events;
    if (c.seed) {
        doc["seed"] = *c.seed;
    }
    doc["out"] = c.out;
    doc["stride"] = c.stride;
    doc["tolerance"] = c.tolerance;
    doc["options"] = c.options;
    return doc;
}

CouplingPattern make_pattern(const CodeLattice& lattice, const RunConfig& config) {
    if (config.pattern.kind == "uniform") {
        return uniform_pattern(lattice, config.params.A);
    }
    if (config.pattern.kind == "square") {
        return build_pattern_square(lattice, config.pattern.A_s, config.pattern.A_w);
    }
    throw ConfigError("unknown pattern kind '" + config.pattern.kind + "'");
}

void validate(const RunConfig& c) {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), c.experiment) == names.end()) {
        throw UsageError("unknown experiment '" + c.experiment + "'");
    }
    c.params.validate();
    if (c.pattern.kind != "uniform" && c.pattern.kind != "square") {
        throw ConfigError("unknown pattern kind '" + c.pattern.kind + "'");
    }
    if (c.pattern.kind == "square") {
        if (!(c.pattern.A_s > 0) || !(c.pattern.A_w > 0) || c.pattern.A_w > c.pattern.A_s) {
            throw ParameterError("square pattern needs 0 < A_w <= A_s");
        }
        if (c.params.L % 4 != 0) {
            throw SizeError("the square pattern needs L divisible by 4");
        }
    }
    if (c.ensemble < 1) {
        throw ParameterError("ensemble size must be >= 1");
    }
    if (!(c.horizon > 0)) {
        throw ParameterError("horizon must be positive");
    }
    if (c.max_events < 1) {
        throw ParameterError("max_events must be >= 1");
    }
    if (c.stride < 1) {
        throw ParameterError("stride must be >= 1");
    }
    if (!(c.tolerance > 0)) {
        throw ParameterError("tolerance must be positive");
    }
    if (is_stochastic(c.experiment) && !c.seed) {
        throw ConfigError("experiment '" + c.experiment + "' needs a master seed");
    }
}

}  // namespace tcbath
