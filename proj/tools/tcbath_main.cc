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


#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tcbath/error.h"
#include "tcbath/experiments.h"
#include "tcbath/run_config.h"

namespace {

std::string quoted(std::string s) {
    for (char& ch : s) {
        if (ch == '"' || ch == '\n') {
            ch = '\'';
        }
    }
    return "\"" + s + "\"";
}

int fail(int code, const std::string& msg) {
    std::cerr << "error: code=" << code << " msg=" << quoted(msg) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tcbath;
    CLI::App app{"Toric code coupled to a bosonic bath: kernels, oracles and kinetic Monte Carlo."};
    std::string experiment;
    std::string config_path;
    std::string out_dir;
    uint64_t seed = 0;
    app.add_option("experiment", experiment, "One of: sum-scan kernel mu-scan oracle-displacement oracle-density "
                                             "chi moments meanfield simulate hinder decode-test energy lattice")
        ->required();
    app.add_option("--config", config_path, "JSON run configuration")->required();
    auto* out_opt = app.add_option("--out", out_dir, "Output directory (overrides the config)");
    auto* seed_opt = app.add_option("--seed", seed, "Master seed (overrides the config)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kExitUsage, e.what());
    }

    try {
        const auto& names = experiment_names();
        if (std::find(names.begin(), names.end(), experiment) == names.end()) {
            throw UsageError("unknown experiment '" + experiment + "'");
        }
        RunConfig config = load_run_config(config_path);
        if (config.experiment != experiment) {
            throw UsageError("config is for experiment '" + config.experiment + "', not '" + experiment + "'");
        }
        if (*out_opt) {
            config.out = out_dir;
        }
        if (*seed_opt) {
            config.seed = seed;
        }
        ExperimentResult result = run_experiment(config);
        std::cout << result.summary.dump() << "\n";
        return kExitOk;
    } catch (const UsageError& e) {
        return fail(kExitUsage, e.what());
    } catch (const ConfigError& e) {
        return fail(kExitConfig, e.what());
    } catch (const ParameterError& e) {
        return fail(kExitConfig, e.what());
    } catch (const SizeError& e) {
        return fail(kExitConfig, e.what());
    } catch (const OutputError& e) {
        return fail(kExitOutput, e.what());
    } catch (const std::exception& e) {
        return fail(kExitSoftware, e.what());
    }
}
