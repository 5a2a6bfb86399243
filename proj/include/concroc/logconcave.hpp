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
#include <functional>
#include <span>
#include <vector>

#include "concroc/rng.hpp"
#include "concroc/weighted_sample.hpp"

namespace concroc {

struct SolverOptions {
    // Knot-addition threshold, expressed as the CDF discrepancy a missing
    // knot would imply (directional derivative divided by the local gap).
    double grad_tol = 1e-8;
    int max_iter = 500;
    // Backtracking contraction factor for the damped Newton steps.
    double newton_damping = 0.5;

    void validate() const;
};

struct FitMoments {
    double mean = 0.0;
    double var = 0.0;
};

// Piecewise-linear concave log-density on [knots.front(), knots.back()],
// -inf outside. Immutable; safe to share between threads.
class LogConcaveFit {
public:
    // Validates strictly increasing knots, finite phi of matching length and
    // concavity (slack 1e-8 on slope differences). Does not renormalize, so
    // a serialized fit reloads bit-identically.
    LogConcaveFit(std::vector<double> knots, std::vector<double> phi, double objective);

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& phi() const { return phi_; }
    const std::vector<double>& slopes() const { return slopes_; }
    double objective() const { return objective_; }
    double lower() const { return knots_.front(); }
    double upper() const { return knots_.back(); }

    // Total mass \int exp(phi); 1 up to rounding for solver output.
    double mass() const { return cum_.back(); }

    double log_density(double x) const;
    double pdf(double x) const;
    double cdf(double x) const;
    // Inverse CDF on [0, 1]; quantile(0) = lower(), quantile(1) = upper().
    // Throws OutOfRange outside [0, 1].
    double quantile(double p) const;

    // CDF values at the knots.
    const std::vector<double>& cdf_at_knots() const { return cum_; }

private:
    std::size_t segment_of(double x) const;

    std::vector<double> knots_;
    std::vector<double> phi_;
    std::vector<double> slopes_;
    std::vector<double> cum_;
    double objective_;
};

// Normalized log-likelihood in its unconstrained form
//   L(phi) = sum_i w_i phi_i - \int exp(phi),
// with phi given at every sample value and interpolated linearly between
// them. Throws LengthMismatch.
double log_likelihood(const WeightedSample& s, std::span<const double> phi);

// Log-concave maximum-likelihood density estimate (active-set method with
// damped Newton steps on each restricted problem). Throws MaxIterExceeded.
LogConcaveFit fit_logconcave(const WeightedSample& s, const SolverOptions& opts = {});

// Exact mean and variance of the fitted density.
FitMoments fit_moments(const LogConcaveFit& fit);

// Inverse-CDF sampling; `uniform01` must return values in (0, 1).
std::vector<double> sample_from_fit(const LogConcaveFit& fit, std::size_t count,
                                    const std::function<double()>& uniform01);
std::vector<double> sample_from_fit(const LogConcaveFit& fit, std::size_t count, Stream& rng);

}  // namespace concroc
