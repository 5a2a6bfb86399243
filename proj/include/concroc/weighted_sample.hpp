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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace concroc {

struct Moments {
    double mean = 0.0;
    double var_pop = 0.0;       // denominator n
    double var_unbiased = 0.0;  // denominator n - 1
};

// Sorted distinct observations with tie multiplicities folded into weights.
// Immutable once built.
class WeightedSample {
public:
    // Canonicalizes a raw observation vector. Throws EmptyInput (fewer than
    // two observations), NonFiniteValue or DegenerateSample (one distinct
    // value).
    static WeightedSample from_raw(std::span<const double> raw);

    // Builds directly from distinct values and weights; validates the type
    // invariants (strictly increasing values, positive weights summing to 1,
    // n_raw >= size).
    WeightedSample(std::vector<double> values, std::vector<double> weights, std::size_t n_raw);

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return values_.size(); }
    std::size_t n_raw() const { return n_raw_; }
    double min() const { return values_.front(); }
    double max() const { return values_.back(); }

    // Empirical CDF, #{obs <= x} / n_raw.
    double ecdf(double x) const;

    // Re-expands the sample to raw observations (ties repeated). Only exact
    // when the weights are multiplicities / n_raw.
    std::vector<double> expand() const;

private:
    std::vector<double> values_;
    std::vector<double> weights_;
    std::vector<double> cum_weights_;
    std::size_t n_raw_;
};

inline WeightedSample preprocess(std::span<const double> raw) {
    return WeightedSample::from_raw(raw);
}

Moments moments(const WeightedSample& s);

}  // namespace concroc
