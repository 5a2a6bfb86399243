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

#include "concroc/logconcave.hpp"
#include "concroc/weighted_sample.hpp"

namespace concroc {

enum class VarianceConvention {
    Population,  // denominator n
    Unbiased,    // denominator n - 1
};

// Log-concave fit convolved with a N(0, gamma^2) kernel, gamma chosen so the
// variance of the result equals the sample variance. With gamma = 0 every
// evaluation delegates to the base fit.
class SmoothedFit {
public:
    SmoothedFit(LogConcaveFit base, double gamma, double sample_var);

    const LogConcaveFit& base() const { return base_; }
    double gamma() const { return gamma_; }
    double sample_var() const { return sample_var_; }

    double mean() const { return base_mean_; }
    double variance() const { return base_var_ + gamma_ * gamma_; }

    double log_pdf(double x) const;
    double pdf(double x) const;
    double cdf(double x) const;
    // 1 - cdf(x), evaluated without cancellation in the upper tail.
    double sf(double x) const;
    // Throws OutOfRange unless p is in [0, 1]; the endpoints map to the
    // support bounds (infinite when gamma > 0).
    double quantile(double p) const;

private:
    LogConcaveFit base_;
    LogConcaveFit mirror_;
    double gamma_;
    double sample_var_;
    double base_mean_;
    double base_var_;
};

// Throws MismatchedInputs when the fit's knots are not observations of s
// or its support differs from the sample range.
SmoothedFit smooth_fit(const LogConcaveFit& fit, const WeightedSample& s,
                       VarianceConvention convention = VarianceConvention::Population);

inline double pdf_smoothed(const SmoothedFit& sf, double x) { return sf.pdf(x); }
inline double cdf_smoothed(const SmoothedFit& sf, double x) { return sf.cdf(x); }
inline double quantile_smoothed(const SmoothedFit& sf, double p) { return sf.quantile(p); }

}  // namespace concroc
