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
#include <string>
#include <variant>
#include <vector>

#include "concroc/rng.hpp"

namespace concroc {

struct NormalDist {
    double mean;
    double variance;
};
struct GammaDist {
    double shape;
    double rate;
};
struct LogisticDist {
    double location;
    double scale;
};
struct LomaxDist {
    double shape;
    double scale;
};
struct StudentTDist {
    double df;
    double location;
};
struct NormalMixtureDist {
    std::vector<double> weights;
    std::vector<NormalDist> components;
};

// Immutable scenario distribution. Factories throw InvalidParam on bad
// parameters.
class Distribution {
public:
    using Family = std::variant<NormalDist, GammaDist, LogisticDist, LomaxDist, StudentTDist, NormalMixtureDist>;

    static Distribution normal(double mean, double variance);
    static Distribution gamma(double shape, double rate);
    static Distribution logistic(double location, double scale);
    static Distribution lomax(double shape, double scale);
    static Distribution student_t(double df, double location);
    static Distribution normal_mixture(std::vector<double> weights, std::vector<NormalDist> components);

    const Family& family() const { return family_; }

    double pdf(double x) const;
    // 0 / 1 outside the support, never throws.
    double cdf(double x) const;
    // p in [0, 1]; the ends map to the support bounds. Throws OutOfRange.
    double quantile(double p) const;
    // Inverse-CDF draws.
    std::vector<double> sample(std::size_t count, Stream& rng) const;

    // Infinite when the moment does not exist.
    double mean() const;
    double variance() const;

    // Short label such as "N(0, 1)" or "Lomax(3, 7)".
    std::string label() const;

private:
    explicit Distribution(Family f) : family_(std::move(f)) {}

    Family family_;
};

inline double dist_cdf(const Distribution& d, double x) { return d.cdf(x); }
inline double dist_quantile(const Distribution& d, double p) { return d.quantile(p); }
inline std::vector<double> dist_sample(const Distribution& d, std::size_t count, Stream& rng) {
    return d.sample(count, rng);
}

}  // namespace concroc
