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

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "concroc/logconcave.hpp"
#include "concroc/smoothed.hpp"

namespace concroc {

enum class RocKind { Empirical, LogConcave, SmoothedLogConcave, Binormal, TrueParametric };

std::string_view to_string(RocKind kind);

// A distribution seen through its CDF and quantile function. The quantile
// must accept p in [0, 1] and may return +-inf at the ends. `sf`, when set,
// is used for 1 - cdf.
struct CdfModel {
    std::function<double(double)> cdf;
    std::function<double(double)> quantile;
    std::function<double(double)> sf = {};
};

struct BinormalParams {
    double a = 0.0;
    double b = 1.0;
};

// R(t) = 1 - G(F^{-1}(1 - t)) for controls F and cases G. Immutable; copies
// share the underlying models.
class RocCurve {
public:
    RocCurve(RocKind kind, CdfModel controls, CdfModel cases);

    RocKind kind() const { return kind_; }
    const CdfModel& controls() const { return *controls_; }
    const CdfModel& cases() const { return *cases_; }
    const std::optional<BinormalParams>& binormal() const { return binormal_; }

    // Value in [0, 1] with eval(1) = 1. Throws OutOfRange for t outside [0, 1].
    double eval(double t) const;

private:
    friend RocCurve empirical_roc(std::span<const double>, std::span<const double>);
    friend RocCurve binormal_roc(std::span<const double>, std::span<const double>);
    friend double auc(const RocCurve&);

    RocKind kind_;
    std::shared_ptr<const CdfModel> controls_;
    std::shared_ptr<const CdfModel> cases_;
    std::optional<BinormalParams> binormal_;
    // Sorted raw samples, kept for the empirical kind.
    std::shared_ptr<const std::vector<double>> x_sorted_;
    std::shared_ptr<const std::vector<double>> y_sorted_;
};

// F^{-1}(p) = X_(i) for the smallest i with i/n >= p; -inf at p = 0.
// `sorted` must be ascending and non-empty.
double empirical_quantile(std::span<const double> sorted, double p);

// Step-function ROC from raw samples. Throws EmptyInput, NonFiniteValue.
RocCurve empirical_roc(std::span<const double> controls, std::span<const double> cases);

RocCurve logcon_roc(const LogConcaveFit& controls, const LogConcaveFit& cases);
RocCurve logcon_roc(const SmoothedFit& controls, const SmoothedFit& cases);

// Phi(a + b Phi^{-1}(t)) with a = (mean_y - mean_x) / sd_y, b = sd_x / sd_y
// from unbiased standard deviations. Throws EmptyInput, ZeroVariance.
RocCurve binormal_roc(std::span<const double> controls, std::span<const double> cases);

inline double roc_eval(const RocCurve& c, double t) { return c.eval(t); }

// Empirical kind: exact Mann-Whitney statistic with ties counted half.
// Other kinds: composite Simpson rule on 2^14 panels.
double auc(const RocCurve& c);

// Phi(a / sqrt(1 + b^2)).
double binormal_auc(const BinormalParams& p);

struct EstimatorOptions {
    SolverOptions solver;
    VarianceConvention convention = VarianceConvention::Population;
};

// Builds the estimator of the given kind from raw samples. Throws
// InvalidParam for TrueParametric, plus whatever the fits throw.
RocCurve estimate_roc(RocKind kind, std::span<const double> controls, std::span<const double> cases,
                      const EstimatorOptions& opts = {});

// Parses "empirical", "logcon", "logcon-smooth", "binormal". Throws
// InvalidParam.
RocKind parse_roc_kind(std::string_view name);

// Smallest t = k / grid_n (k = 1..grid_n-1) with R(t) < t, if any.
std::optional<double> first_below_diagonal(const RocCurve& c, std::size_t grid_n = 1000);

}  // namespace concroc
