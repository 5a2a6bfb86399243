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

#include "concroc/normal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "concroc/errors.hpp"

namespace concroc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_quantile(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "normal_quantile: p outside [0,1]");
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double log_normal_sf(double z) {
    if (z < 30.0) return std::log(0.5 * std::erfc(z * kInvSqrt2));
    // Asymptotic expansion of the Mills ratio.
    const double r = 1.0 / (z * z);
    const double series = 1.0 - r * (1.0 - r * (3.0 - r * (15.0 - r * 105.0)));
    return -0.5 * z * z - std::log(z) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

double log_normal_diff(double upper, double lower) {
    if (!(upper > lower)) return -std::numeric_limits<double>::infinity();
    if (lower >= 0.0) {
        const double lv = log_normal_sf(lower);
        return lv + std::log1p(-std::exp(log_normal_sf(upper) - lv));
    }
    if (upper <= 0.0) {
        const double lu = log_normal_sf(-upper);
        return lu + std::log1p(-std::exp(log_normal_sf(-lower) - lu));
    }
    return std::log1p(-(0.5 * std::erfc(upper * kInvSqrt2) + 0.5 * std::erfc(-lower * kInvSqrt2)));
}

}  // namespace concroc
