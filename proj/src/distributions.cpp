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

#include "concroc/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "concroc/errors.hpp"
#include "concroc/normal.hpp"

namespace concroc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
    if (!(std::isfinite(v) && v > 0.0)) throw Error(ErrorCode::InvalidParam, std::string(what) + " must be positive");
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidParam, std::string(what) + " must be finite");
}

double normal_cdf_of(const NormalDist& d, double x) { return normal_cdf((x - d.mean) / std::sqrt(d.variance)); }

double normal_pdf_of(const NormalDist& d, double x) {
    const double sd = std::sqrt(d.variance);
    return normal_pdf((x - d.mean) / sd) / sd;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace

Distribution Distribution::normal(double mean, double variance) {
    require_finite(mean, "normal mean");
    require_positive(variance, "normal variance");
    return Distribution(NormalDist{mean, variance});
}

Distribution Distribution::gamma(double shape, double rate) {
    require_positive(shape, "gamma shape");
    require_positive(rate, "gamma rate");
    return Distribution(GammaDist{shape, rate});
}

Distribution Distribution::logistic(double location, double scale) {
    require_finite(location, "logistic location");
    require_positive(scale, "logistic scale");
    return Distribution(LogisticDist{location, scale});
}

Distribution Distribution::lomax(double shape, double scale) {
    require_positive(shape, "Lomax shape");
    require_positive(scale, "Lomax scale");
    return Distribution(LomaxDist{shape, scale});
}

Distribution Distribution::student_t(double df, double location) {
    require_positive(df, "t degrees of freedom");
    require_finite(location, "t location");
    return Distribution(StudentTDist{df, location});
}

Distribution Distribution::normal_mixture(std::vector<double> weights, std::vector<NormalDist> components) {
    if (weights.empty() || weights.size() != components.size()) {
        throw Error(ErrorCode::InvalidParam, "mixture needs one weight per component");
    }
    for (double w : weights) require_positive(w, "mixture weight");
    for (const auto& c : components) {
        require_finite(c.mean, "mixture component mean");
        require_positive(c.variance, "mixture component variance");
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::InvalidParam, "mixture weights must sum to 1");
    return Distribution(NormalMixtureDist{std::move(weights), std::move(components)});
}

double Distribution::pdf(double x) const {
    return std::visit(
        Overload{
            [&](const NormalDist& d) { return normal_pdf_of(d, x); },
            [&](const GammaDist& d) { return x <= 0.0 ? 0.0 : d.rate * boost::math::gamma_p_derivative(d.shape, d.rate * x); },
            [&](const LogisticDist& d) {
                const double e = std::exp(-std::abs(x - d.location) / d.scale);
                return e / (d.scale * (1.0 + e) * (1.0 + e));
            },
            [&](const LomaxDist& d) {
                return x < 0.0 ? 0.0 : d.shape / d.scale * std::pow(1.0 + x / d.scale, -d.shape - 1.0);
            },
            [&](const StudentTDist& d) { return boost::math::pdf(boost::math::students_t(d.df), x - d.location); },
            [&](const NormalMixtureDist& d) {
                double v = 0.0;
                for (std::size_t i = 0; i < d.weights.size(); ++i) v += d.weights[i] * normal_pdf_of(d.components[i], x);
                return v;
            },
        },
        family_);
}

double Distribution::cdf(double x) const {
    if (std::isnan(x)) throw Error(ErrorCode::NonFiniteValue, "cdf of NaN");
    return std::visit(
        Overload{
            [&](const NormalDist& d) { return normal_cdf_of(d, x); },
            [&](const GammaDist& d) {
                if (x <= 0.0) return 0.0;
                if (x == kInf) return 1.0;
                return boost::math::gamma_p(d.shape, d.rate * x);
            },
            [&](const LogisticDist& d) { return 1.0 / (1.0 + std::exp(-(x - d.location) / d.scale)); },
            [&](const LomaxDist& d) { return x <= 0.0 ? 0.0 : -std::expm1(-d.shape * std::log1p(x / d.scale)); },
            [&](const StudentTDist& d) {
                if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
                return boost::math::cdf(boost::math::students_t(d.df), x - d.location);
            },
            [&](const NormalMixtureDist& d) {
                double v = 0.0;
                for (std::size_t i = 0; i < d.weights.size(); ++i) v += d.weights[i] * normal_cdf_of(d.components[i], x);
                return std::min(v, 1.0);
            },
        },
        family_);
}

double Distribution::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "quantile: p outside [0,1]");
    return std::visit(
        Overload{
            [&](const NormalDist& d) { return d.mean + std::sqrt(d.variance) * normal_quantile(p); },
            [&](const GammaDist& d) {
                if (p == 0.0) return 0.0;
                if (p == 1.0) return kInf;
                return boost::math::gamma_p_inv(d.shape, p) / d.rate;
            },
            [&](const LogisticDist& d) {
                if (p == 0.0) return -kInf;
                if (p == 1.0) return kInf;
                return d.location + d.scale * (std::log(p) - std::log1p(-p));
            },
            [&](const LomaxDist& d) {
                if (p == 1.0) return kInf;
                return d.scale * std::expm1(-std::log1p(-p) / d.shape);
            },
            [&](const StudentTDist& d) {
                if (p == 0.0) return -kInf;
                if (p == 1.0) return kInf;
                return d.location + boost::math::quantile(boost::math::students_t(d.df), p);
            },
            [&](const NormalMixtureDist& d) {
                if (p == 0.0) return -kInf;
                if (p == 1.0) return kInf;
                // The mixture quantile lies between the component quantiles.
                double lo = kInf, hi = -kInf;
                for (const auto& c : d.components) {
                    const double q = c.mean + std::sqrt(c.variance) * normal_quantile(p);
                    lo = std::min(lo, q);
                    hi = std::max(hi, q);
                }
                double x = 0.5 * (lo + hi);
                for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(x)); ++it) {
                    const double f = cdf(x) - p;
                    if (std::abs(f) <= 1e-14) break;
                    if (f < 0.0) lo = x;
                    else hi = x;
                    const double dens = pdf(x);
                    double next = dens > 0.0 ? x - f / dens : lo;
                    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
                    x = next;
                }
                return x;
            },
        },
        family_);
}

std::vector<double> Distribution::sample(std::size_t count, Stream& rng) const {
    std::vector<double> out(count);
    for (auto& v : out) v = quantile(rng.uniform());
    return out;
}

double Distribution::mean() const {
    return std::visit(
        Overload{
            [](const NormalDist& d) { return d.mean; },
            [](const GammaDist& d) { return d.shape / d.rate; },
            [](const LogisticDist& d) { return d.location; },
            [](const LomaxDist& d) { return d.shape > 1.0 ? d.scale / (d.shape - 1.0) : kInf; },
            [](const StudentTDist& d) { return d.df > 1.0 ? d.location : kInf; },
            [](const NormalMixtureDist& d) {
                double m = 0.0;
                for (std::size_t i = 0; i < d.weights.size(); ++i) m += d.weights[i] * d.components[i].mean;
                return m;
            },
        },
        family_);
}

double Distribution::variance() const {
    return std::visit(
        Overload{
            [](const NormalDist& d) { return d.variance; },
            [](const GammaDist& d) { return d.shape / (d.rate * d.rate); },
            [](const LogisticDist& d) { return d.scale * d.scale * M_PI * M_PI / 3.0; },
            [](const LomaxDist& d) {
                if (d.shape <= 2.0) return kInf;
                const double a = d.shape;
                return d.scale * d.scale * a / ((a - 1.0) * (a - 1.0) * (a - 2.0));
            },
            [](const StudentTDist& d) { return d.df > 2.0 ? d.df / (d.df - 2.0) : kInf; },
            [](const NormalMixtureDist& d) {
                double m = 0.0, second = 0.0;
                for (std::size_t i = 0; i < d.weights.size(); ++i) {
                    const auto& c = d.components[i];
                    m += d.weights[i] * c.mean;
                    second += d.weights[i] * (c.variance + c.mean * c.mean);
                }
                return second - m * m;
            },
        },
        family_);
}

std::string Distribution::label() const {
    return std::visit(
        Overload{
            [](const NormalDist& d) { return "N(" + fmt(d.mean) + ", " + fmt(d.variance) + ")"; },
            [](const GammaDist& d) { return "Ga(" + fmt(d.shape) + ", " + fmt(d.rate) + ")"; },
            [](const LogisticDist& d) { return "Log(" + fmt(d.location) + ", " + fmt(d.scale) + ")"; },
            [](const LomaxDist& d) { return "Lomax(" + fmt(d.shape) + ", " + fmt(d.scale) + ")"; },
            [](const StudentTDist& d) { return "t(" + fmt(d.df) + ", " + fmt(d.location) + ")"; },
            [](const NormalMixtureDist& d) {
                std::string s;
                for (std::size_t i = 0; i < d.weights.size(); ++i) {
                    if (i) s += " + ";
                    s += fmt(d.weights[i]) + "*N(" + fmt(d.components[i].mean) + ", " + fmt(d.components[i].variance) + ")";
                }
                return s;
            },
        },
        family_);
}

}  // namespace concroc
