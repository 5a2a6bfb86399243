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

#include "concroc/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "concroc/errors.hpp"
#include "concroc/parallel.hpp"
#include "concroc/quantiles.hpp"
#include "concroc/rng.hpp"

namespace concroc {

namespace {

constexpr int kMaxConsecutiveRedraws = 100;

void resample(std::span<const double> from, std::vector<double>& to, Stream& rng) {
    for (auto& v : to) v = from[rng.below(from.size())];
}

bool has_two_distinct(const std::vector<double>& v) {
    return std::any_of(v.begin(), v.end(), [&](double x) { return x != v.front(); });
}

}  // namespace

void BootSpec::validate() const {
    if (B < 2) throw Error(ErrorCode::InvalidParam, "B must be at least 2");
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidParam, "alpha must lie in (0,1)");
    if (t_list.empty()) throw Error(ErrorCode::InvalidParam, "no evaluation points given");
    for (double t : t_list) {
        if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::InvalidParam, "evaluation points must lie in (0,1)");
    }
    if (method == RocKind::TrueParametric) throw Error(ErrorCode::InvalidParam, "the true curve is not an estimator");
}

BootResult boot_ci(std::span<const double> controls, std::span<const double> cases, const BootSpec& spec) {
    spec.validate();
    const std::size_t nt = spec.t_list.size();
    const RocCurve point = estimate_roc(spec.method, controls, cases, spec.estimator);

    // values[b * nt + i] = replicate b at t_list[i]
    std::vector<double> values(spec.B * nt);
    std::vector<std::size_t> redraws(spec.B, 0);
    parallel_for(spec.B, spec.threads, [&](std::size_t b) {
        Stream rng(derive_seed(spec.seed, {b}));
        std::vector<double> x(controls.size()), y(cases.size());
        for (int attempt = 0;; ++attempt) {
            if (attempt == kMaxConsecutiveRedraws) {
                throw Error(ErrorCode::ResampleDegenerate,
                            "100 consecutive degenerate resamples in replicate " + std::to_string(b));
            }
            resample(controls, x, rng);
            resample(cases, y, rng);
            if (has_two_distinct(x) && has_two_distinct(y)) break;
            ++redraws[b];
        }
        const RocCurve c = estimate_roc(spec.method, x, y, spec.estimator);
        for (std::size_t i = 0; i < nt; ++i) values[b * nt + i] = c.eval(spec.t_list[i]);
    });

    BootResult out;
    out.replicates = spec.B;
    for (std::size_t r : redraws) out.redraws += r;
    std::vector<double> column(spec.B);
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t b = 0; b < spec.B; ++b) column[b] = values[b * nt + i];
        std::sort(column.begin(), column.end());
        BootPoint p;
        p.t = spec.t_list[i];
        p.estimate = point.eval(p.t);
        p.lower = interpolated_quantile(column, spec.alpha / 2.0);
        p.upper = interpolated_quantile(column, 1.0 - spec.alpha / 2.0);
        out.points.push_back(p);
    }
    return out;
}

}  // namespace concroc
