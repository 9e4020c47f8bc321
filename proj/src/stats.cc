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

#include "tcbath/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tcbath/error.h"

namespace tcbath {

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ParameterError("fit_line needs at least two (x, y) pairs");
    }
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) {
        throw ParameterError("fit_line needs at least two distinct x values");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res += r * r;
    }
    fit.r_squared = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ParameterError("median of an empty sample");
    }
    size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    double hi = values[mid];
    if (values.size() % 2 == 1) {
        return hi;
    }
    double lo = *std::max_element(values.begin(), values.begin() + mid);
    return 0.5 * (lo + hi);
}

double mean(const std::vector<double>& values) {
    if (values.empty()) {
        throw ParameterError("mean of an empty sample");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double batch_mean_standard_error(const std::vector<double>& series, int num_batches) {
    if (num_batches < 2 || series.size() < static_cast<size_t>(num_batches)) {
        throw ParameterError("batch_mean_standard_error needs at least two non-empty batches");
    }
    size_t per = series.size() / num_batches;
    std::vector<double> means;
    for (int b = 0; b < num_batches; b++) {
        double s = 0;
        for (size_t i = b * per; i < (b + 1) * per; i++) {
            s += series[i];
        }
        means.push_back(s / static_cast<double>(per));
    }
    double m = mean(means);
    double var = 0;
    for (double v : means) {
        var += (v - m) * (v - m);
    }
    var /= (num_batches - 1);
    return std::sqrt(var / num_batches);
}

}  // namespace tcbath
