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

#include "concroc/roc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "concroc/errors.hpp"
#include "concroc/normal.hpp"

namespace concroc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSimpsonPanels = 1 << 14;

std::shared_ptr<const std::vector<double>> sorted_copy(std::span<const double> raw, const char* what) {
    if (raw.empty()) throw Error(ErrorCode::EmptyInput, std::string(what) + " sample is empty");
    auto v = std::make_shared<std::vector<double>>(raw.begin(), raw.end());
    for (double x : *v) {
        if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteValue, std::string(what) + " sample has a non-finite value");
    }
    std::sort(v->begin(), v->end());
    return v;
}

CdfModel empirical_model(std::shared_ptr<const std::vector<double>> v) {
    return {[v](double x) {
                const auto it = std::upper_bound(v->begin(), v->end(), x);
                return static_cast<double>(it - v->begin()) / static_cast<double>(v->size());
            },
            [v](double p) { return empirical_quantile(*v, p); }};
}

CdfModel fit_model(const LogConcaveFit& fit) {
    auto f = std::make_shared<const LogConcaveFit>(fit);
    return {[f](double x) { return f->cdf(x); }, [f](double p) { return f->quantile(p); }};
}

CdfModel fit_model(const SmoothedFit& fit) {
    auto f = std::make_shared<const SmoothedFit>(fit);
    return {[f](double x) { return f->cdf(x); }, [f](double p) { return f->quantile(p); },
            [f](double x) { return f->sf(x); }};
}

struct MeanSd {
    double mean;
    double sd;
};

MeanSd mean_sd(std::span<const double> v, const char* what) {
    if (v.size() < 2) throw Error(ErrorCode::EmptyInput, std::string(what) + " sample needs at least two values");
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
    if (!(sd > 0.0)) throw Error(ErrorCode::ZeroVariance, std::string(what) + " sample has zero variance");
    return {mean, sd};
}

}  // namespace

std::string_view to_string(RocKind kind) {
    switch (kind) {
        case RocKind::Empirical: return "empirical";
        case RocKind::LogConcave: return "logcon";
        case RocKind::SmoothedLogConcave: return "logcon-smooth";
        case RocKind::Binormal: return "binormal";
        case RocKind::TrueParametric: return "true";
    }
    return "unknown";
}

RocCurve::RocCurve(RocKind kind, CdfModel controls, CdfModel cases)
    : kind_(kind),
      controls_(std::make_shared<const CdfModel>(std::move(controls))),
      cases_(std::make_shared<const CdfModel>(std::move(cases))) {}

double RocCurve::eval(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::OutOfRange, "ROC argument outside [0,1]");
    if (t == 1.0) return 1.0;
    if (binormal_) return normal_cdf(binormal_->a + binormal_->b * normal_quantile(t));
    const double q = controls_->quantile(1.0 - t);
    if (q == kInf) return 0.0;
    if (q == -kInf) return 1.0;
    const double r = cases_->sf ? cases_->sf(q) : 1.0 - cases_->cdf(q);
    return std::clamp(r, 0.0, 1.0);
}

double empirical_quantile(std::span<const double> sorted, double p) {
    if (p <= 0.0) return -kInf;
    const auto n = static_cast<double>(sorted.size());
    auto i = static_cast<std::size_t>(std::ceil(p * n));
    if (i > 1 && static_cast<double>(i - 1) / n >= p) --i;
    i = std::clamp<std::size_t>(i, 1, sorted.size());
    return sorted[i - 1];
}

RocCurve empirical_roc(std::span<const double> controls, std::span<const double> cases) {
    auto x = sorted_copy(controls, "controls");
    auto y = sorted_copy(cases, "cases");
    RocCurve c(RocKind::Empirical, empirical_model(x), empirical_model(y));
    c.x_sorted_ = std::move(x);
    c.y_sorted_ = std::move(y);
    return c;
}

RocCurve logcon_roc(const LogConcaveFit& controls, const LogConcaveFit& cases) {
    return RocCurve(RocKind::LogConcave, fit_model(controls), fit_model(cases));
}

RocCurve logcon_roc(const SmoothedFit& controls, const SmoothedFit& cases) {
    return RocCurve(RocKind::SmoothedLogConcave, fit_model(controls), fit_model(cases));
}

RocCurve binormal_roc(std::span<const double> controls, std::span<const double> cases) {
    const MeanSd x = mean_sd(controls, "controls");
    const MeanSd y = mean_sd(cases, "cases");
    auto normal_model = [](MeanSd d) {
        return CdfModel{[d](double v) { return normal_cdf((v - d.mean) / d.sd); },
                        [d](double p) { return d.mean + d.sd * normal_quantile(p); }};
    };
    RocCurve c(RocKind::Binormal, normal_model(x), normal_model(y));
    c.binormal_ = BinormalParams{(y.mean - x.mean) / y.sd, x.sd / y.sd};
    return c;
}

RocCurve estimate_roc(RocKind kind, std::span<const double> controls, std::span<const double> cases,
                      const EstimatorOptions& opts) {
    switch (kind) {
        case RocKind::Empirical: return empirical_roc(controls, cases);
        case RocKind::Binormal: return binormal_roc(controls, cases);
        case RocKind::LogConcave:
            return logcon_roc(fit_logconcave(preprocess(controls), opts.solver),
                              fit_logconcave(preprocess(cases), opts.solver));
        case RocKind::SmoothedLogConcave: {
            const auto sx = preprocess(controls);
            const auto sy = preprocess(cases);
            return logcon_roc(smooth_fit(fit_logconcave(sx, opts.solver), sx, opts.convention),
                              smooth_fit(fit_logconcave(sy, opts.solver), sy, opts.convention));
        }
        case RocKind::TrueParametric: break;
    }
    throw Error(ErrorCode::InvalidParam, "the true curve cannot be estimated from data");
}

RocKind parse_roc_kind(std::string_view name) {
    for (RocKind k : {RocKind::Empirical, RocKind::LogConcave, RocKind::SmoothedLogConcave, RocKind::Binormal}) {
        if (name == to_string(k)) return k;
    }
    throw Error(ErrorCode::InvalidParam, "unknown method '" + std::string(name) + "'");
}

double auc(const RocCurve& c) {
    if (c.kind_ == RocKind::Empirical) {
        const auto& x = *c.x_sorted_;
        const auto& y = *c.y_sorted_;
        std::int64_t twice = 0;
        for (double v : x) {
            const auto lo = std::lower_bound(y.begin(), y.end(), v);
            const auto hi = std::upper_bound(lo, y.end(), v);
            twice += 2 * static_cast<std::int64_t>(y.end() - hi) + static_cast<std::int64_t>(hi - lo);
        }
        return static_cast<double>(twice) / (2.0 * static_cast<double>(x.size()) * static_cast<double>(y.size()));
    }
    const double h = 1.0 / kSimpsonPanels;
    double sum = c.eval(0.0) + c.eval(1.0);
    for (int i = 1; i < kSimpsonPanels; ++i) sum += (i % 2 ? 4.0 : 2.0) * c.eval(i * h);
    return sum * h / 3.0;
}

double binormal_auc(const BinormalParams& p) { return normal_cdf(p.a / std::sqrt(1.0 + p.b * p.b)); }

std::optional<double> first_below_diagonal(const RocCurve& c, std::size_t grid_n) {
    for (std::size_t k = 1; k < grid_n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(grid_n);
        if (c.eval(t) < t) return t;
    }
    return std::nullopt;
}

}  // namespace concroc
