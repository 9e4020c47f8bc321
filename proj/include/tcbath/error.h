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

#ifndef TCBATH_ERROR_H
#define TCBATH_ERROR_H

#include <stdexcept>
#include <string>

namespace tcbath {

/// Invalid lattice size (odd, nonpositive, or incompatible with a pattern).
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A model or run parameter outside its allowed range.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A bosonic single-particle spectrum with a non-positive level.
struct SpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A violated structural invariant (odd syndrome, residual syndrome after correction).
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Root refinement did not reach tolerance; carries the last bracket.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double lo, double hi)
        : std::runtime_error(what + " (bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "])"),
          lo(lo),
          hi(hi) {
    }
    double lo;
    double hi;
};

/// Malformed or incomplete run configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unknown experiment or bad command-line usage.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An output file or directory that cannot be written.
struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tcbath

#endif
