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

#include "concroc/smoothed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>

#include "concroc/errors.hpp"
#include "concroc/normal.hpp"

namespace concroc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Beyond this many bandwidths a segment is either fully counted or ignored.
constexpr double kTailCut = 12.0;
// Below this |slope| * length the integration-by-parts form cancels badly.
constexpr double kFlatSegment = 1e-3;

}  // namespace

double SmoothedFit::log_pdf(double x) const {
    if (gamma_ == 0.0) return base_.log_density(x);
    const auto& k = base_.knots();
    const auto& phi = base_.phi();
    const auto& sl = base_.slopes();
    const double g2 = gamma_ * gamma_;
    double top = -kInf;
    std::vector<double> terms(sl.size());
    for (std::size_t j = 0; j < sl.size(); ++j) {
        const double s = sl[j];
        const double shift = x + s * g2;
        terms[j] = phi[j] + s * (x - k[j]) + 0.5 * s * s * g2 +
                   log_normal_diff((k[j + 1] - shift) / gamma_, (k[j] - shift) / gamma_);
        top = std::max(top, terms[j]);
    }
    if (top == -kInf) return top;
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - top);
    return top + std::log(sum);
}

double SmoothedFit::pdf(double x) const {
    if (gamma_ == 0.0) return base_.pdf(x);
    return std::exp(log_pdf(x));
}

namespace {

// \int_{l}^{r} Phi((x - y) / gamma) exp(phi(y)) dy for segment j of f.
double segment_cdf(const LogConcaveFit& f, double gamma, std::size_t j, double x) {
    const auto& k = f.knots();
    const auto& phi = f.phi();
    const double l = k[j], r = k[j + 1];
    const double a = phi[j], b = phi[j + 1];
    const double s = f.slopes()[j];
    if (std::abs(s) * (r - l) < kFlatSegment) {
        // Fixed Gauss-Legendre pieces, split where the kernel CDF bends.
        auto g = [&](double y) { return normal_cdf((x - y) / gamma) * std::exp(a + s * (y - l)); };
        double cuts[11];
        std::size_t nc = 0;
        cuts[nc++] = l;
        for (double m : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0}) {
            const double c = x + m * gamma;
            if (c > l && c < r) cuts[nc++] = c;
        }
        cuts[nc++] = r;
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < nc; ++i) {
            total += boost::math::quadrature::gauss<double, 20>::integrate(g, cuts[i], cuts[i + 1]);
        }
        return total;
    }
    const double g2 = gamma * gamma;
    const double shift = x + s * g2;
    const double log_inner = a + s * (x - l) + 0.5 * s * s * g2 +
                             log_normal_diff((r - shift) / gamma, (l - shift) / gamma);
    const double inner = std::exp(log_inner);
    return (std::exp(b) * normal_cdf((x - r) / gamma) - std::exp(a) * normal_cdf((x - l) / gamma) + inner) / s;
}

// Smoothed CDF of f at x; accurate in absolute terms, best left of the mode.
double lower_cdf(const LogConcaveFit& f, double gamma, double x) {
    const auto& k = f.knots();
    const auto& cum = f.cdf_at_knots();
    const double reach = kTailCut * gamma;
    // Segments ending before x - reach count fully, those starting after
    // x + reach not at all.
    const std::size_t first = static_cast<std::size_t>(
        std::upper_bound(k.begin(), k.end(), x - reach) - k.begin());
    const std::size_t last = static_cast<std::size_t>(
        std::lower_bound(k.begin(), k.end(), x + reach) - k.begin());
    const std::size_t j0 = first == 0 ? 0 : first - 1;
    const std::size_t j1 = std::min(last, k.size() - 1);
    double v = cum[j0];
    for (std::size_t j = j0; j < j1; ++j) v += segment_cdf(f, gamma, j, x);
    return std::clamp(v, 0.0, 1.0);
}

LogConcaveFit mirrored(const LogConcaveFit& f) {
    std::vector<double> k(f.knots().rbegin(), f.knots().rend());
    for (auto& v : k) v = -v;
    return LogConcaveFit(std::move(k), std::vector<double>(f.phi().rbegin(), f.phi().rend()), f.objective());
}

}  // namespace

SmoothedFit::SmoothedFit(LogConcaveFit base, double gamma, double sample_var)
    : base_(std::move(base)), mirror_(mirrored(base_)), gamma_(gamma), sample_var_(sample_var) {
    if (!std::isfinite(gamma_) || gamma_ < 0.0) throw Error(ErrorCode::InvalidParam, "bandwidth must be finite and >= 0");
    if (!std::isfinite(sample_var_) || sample_var_ < 0.0) {
        throw Error(ErrorCode::InvalidParam, "sample variance must be finite and >= 0");
    }
    const FitMoments m = fit_moments(base_);
    base_mean_ = m.mean;
    base_var_ = m.var;
}

double SmoothedFit::cdf(double x) const {
    if (gamma_ == 0.0) return base_.cdf(x);
    if (x <= base_mean_) return lower_cdf(base_, gamma_, x);
    return 1.0 - lower_cdf(mirror_, gamma_, -x);
}

double SmoothedFit::sf(double x) const {
    if (gamma_ == 0.0) return 1.0 - base_.cdf(x);
    if (x <= base_mean_) return 1.0 - lower_cdf(base_, gamma_, x);
    return lower_cdf(mirror_, gamma_, -x);
}

double SmoothedFit::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "quantile: p outside [0,1]");
    if (gamma_ == 0.0) return base_.quantile(p);
    if (p == 0.0) return -kInf;
    if (p == 1.0) return kInf;
    // X + gamma Z is bracketed by lower + gamma Z and upper + gamma Z.
    const double z = gamma_ * normal_quantile(p);
    double lo = base_.lower() + z;
    double hi = base_.upper() + z;
    double x = std::clamp(base_.quantile(p), lo, hi);
    for (int it = 0; it < 200; ++it) {
        const double f = cdf(x) - p;
        if (std::abs(f) <= 1e-14) break;
        if (f < 0.0) lo = x;
        else hi = x;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
        const double d = pdf(x);
        double next = d > 0.0 ? x - f / d : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
    }
    return x;
}

SmoothedFit smooth_fit(const LogConcaveFit& fit, const WeightedSample& s, VarianceConvention convention) {
    const auto& v = s.values();
    if (fit.lower() != s.min() || fit.upper() != s.max()) {
        throw Error(ErrorCode::MismatchedInputs, "fit support differs from the sample range");
    }
    for (double knot : fit.knots()) {
        if (!std::binary_search(v.begin(), v.end(), knot)) {
            throw Error(ErrorCode::MismatchedInputs, "fit knot is not a sample value");
        }
    }
    const Moments m = moments(s);
    const double sample_var = convention == VarianceConvention::Population ? m.var_pop : m.var_unbiased;
    const double gap = sample_var - fit_moments(fit).var;
    return SmoothedFit(fit, gap > 0.0 ? std::sqrt(gap) : 0.0, sample_var);
}

}  // namespace concroc
