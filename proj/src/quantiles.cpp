// Copyright 2026 The concroc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "concroc/quantiles.hpp"

#include <algorithm>
#include <cmath>

#include "concroc/errors.hpp"

namespace concroc {

double interpolated_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw Error(ErrorCode::EmptyInput, "quantile of an empty set");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "quantile level outside [0,1]");
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Summary summarize(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return {values.front(), interpolated_quantile(values, 0.25), interpolated_quantile(values, 0.5),
            interpolated_quantile(values, 0.75), values.back()};
}

}  // namespace concroc
