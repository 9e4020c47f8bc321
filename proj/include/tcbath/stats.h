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

#ifndef TCBATH_STATS_H
#define TCBATH_STATS_H

#include <vector>

namespace tcbath {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Median of the values (average of the middle pair for even counts).
double median(std::vector<double> values);

double mean(const std::vector<double>& values);

/// Standard error of the mean from non-overlapping batch means.
double batch_mean_standard_error(const std::vector<double>& series, int num_batches);

}  // namespace tcbath

#endif
