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

#include "concroc/jfunc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "concroc/errors.hpp"

namespace concroc {

namespace {

constexpr double kJSeriesCutoff = 1e-4;
// The partials lose about -log10(|d|^k) digits in closed form, so they
// switch to their power series over a wider window.
constexpr double kPartialSeriesCutoff = 1.0;

// sum_{m>=0} d^m / (m! * denom(m)), |d| < 1.
template <class Denom>
double power_series(double d, Denom denom) {
    double term = 1.0;  // d^m / m!
    double sum = 1.0 / denom(0);
    for (int m = 1; m < 30; ++m) {
        term *= d / m;
        const double add = term / denom(m);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

double j_fn(double a, double b) {
    const double d = b - a;
    if (std::abs(d) < kJSeriesCutoff) {
        // e^a * (1 + d/2 + d^2/6 + d^3/24 + d^4/120 + d^5/720)
        double term = 1.0, sum = 1.0;
        for (int m = 1; m <= 5; ++m) {
            term *= d / (m + 1);
            sum += term;
        }
        return std::exp(a) * sum;
    }
    const double hi = std::max(a, b);
    const double ad = std::abs(d);
    return std::exp(hi) * (-std::expm1(-ad)) / ad;
}

double j_b(double a, double b) {
    const double d = b - a;
    if (std::abs(d) < kPartialSeriesCutoff) {
        return std::exp(a) * power_series(d, [](int m) { return m + 2.0; });
    }
    return (std::exp(b) * (d - 1.0) + std::exp(a)) / (d * d);
}

double j_bb(double a, double b) {
    const double d = b - a;
    if (std::abs(d) < kPartialSeriesCutoff) {
        return std::exp(a) * power_series(d, [](int m) { return m + 3.0; });
    }
    return (std::exp(b) * (d * d - 2.0 * d + 2.0) - 2.0 * std::exp(a)) / (d * d * d);
}

double j_ab(double a, double b) {
    const double d = b - a;
    if (std::abs(d) < kPartialSeriesCutoff) {
        return std::exp(a) * power_series(d, [](int m) { return (m + 2.0) * (m + 3.0); });
    }
    return ((d - 2.0) * std::exp(b) + (d + 2.0) * std::exp(a)) / (d * d * d);
}

double j_a(double a, double b) { return j_b(b, a); }
double j_aa(double a, double b) { return j_bb(b, a); }

double j_partial(double a, double b, int order_a, int order_b) {
    if (order_a == 1 && order_b == 0) return j_a(a, b);
    if (order_a == 0 && order_b == 1) return j_b(a, b);
    if (order_a == 2 && order_b == 0) return j_aa(a, b);
    if (order_a == 1 && order_b == 1) return j_ab(a, b);
    if (order_a == 0 && order_b == 2) return j_bb(a, b);
    throw Error(ErrorCode::UnsupportedOrder, "unsupported J partial order (" + std::to_string(order_a) +
                                                 "," + std::to_string(order_b) + ")");
}

}  // namespace concroc
