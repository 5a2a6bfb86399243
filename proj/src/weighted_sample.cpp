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

#include "concroc/weighted_sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "concroc/errors.hpp"

namespace concroc {

WeightedSample WeightedSample::from_raw(std::span<const double> raw) {
    if (raw.size() < 2) {
        throw Error(ErrorCode::EmptyInput, "sample needs at least 2 observations, got " +
                                               std::to_string(raw.size()));
    }
    for (double v : raw) {
        if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "sample contains a non-finite value");
    }
    std::vector<double> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> values;
    std::vector<std::size_t> counts;
    for (double v : sorted) {
        if (values.empty() || v != values.back()) {
            values.push_back(v);
            counts.push_back(1);
        } else {
            ++counts.back();
        }
    }
    if (values.size() < 2) {
        throw Error(ErrorCode::DegenerateSample, "sample has a single distinct value");
    }
    const double n = static_cast<double>(raw.size());
    std::vector<double> weights(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) weights[i] = static_cast<double>(counts[i]) / n;
    return WeightedSample(std::move(values), std::move(weights), raw.size());
}

WeightedSample::WeightedSample(std::vector<double> values, std::vector<double> weights,
                               std::size_t n_raw)
    : values_(std::move(values)), weights_(std::move(weights)), n_raw_(n_raw) {
    if (values_.size() != weights_.size()) {
        throw Error(ErrorCode::LengthMismatch, "values and weights differ in length");
    }
    if (values_.size() < 2) throw Error(ErrorCode::DegenerateSample, "need at least 2 distinct values");
    if (n_raw_ < values_.size()) throw Error(ErrorCode::InvalidParam, "n_raw smaller than number of values");
    double total = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) throw Error(ErrorCode::NonFiniteValue, "non-finite value");
        if (i > 0 && !(values_[i] > values_[i - 1])) {
            throw Error(ErrorCode::InvalidParam, "values must be strictly increasing");
        }
        if (!(weights_[i] > 0.0)) throw Error(ErrorCode::InvalidParam, "weights must be positive");
        total += weights_[i];
    }
    if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidParam, "weights must sum to 1");

    cum_weights_.resize(weights_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        acc += weights_[i];
        cum_weights_[i] = acc;
    }
    cum_weights_.back() = 1.0;
}

double WeightedSample::ecdf(double x) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), x);
    if (it == values_.begin()) return 0.0;
    return cum_weights_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

std::vector<double> WeightedSample::expand() const {
    std::vector<double> out;
    out.reserve(n_raw_);
    const double n = static_cast<double>(n_raw_);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const auto reps = static_cast<std::size_t>(std::llround(weights_[i] * n));
        out.insert(out.end(), reps, values_[i]);
    }
    return out;
}

Moments moments(const WeightedSample& s) {
    const auto& x = s.values();
    const auto& w = s.weights();
    Moments m;
    for (std::size_t i = 0; i < x.size(); ++i) m.mean += w[i] * x[i];
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - m.mean;
        m.var_pop += w[i] * d * d;
    }
    const double n = static_cast<double>(s.n_raw());
    m.var_unbiased = m.var_pop * n / (n - 1.0);
    return m;
}

}  // namespace concroc
