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

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "concroc/errors.hpp"
#include "concroc/logconcave.hpp"
#include "concroc/smoothed.hpp"
#include "support/oracles.hpp"

using concroc::SmoothedFit;

namespace {

double phi_std(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI); }
double cdf_std(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

struct Case {
    std::vector<double> raw;
    SmoothedFit sf;
};

std::vector<Case> sample_cases(int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Case> out;
    for (int i = 0; i < count; ++i) {
        auto raw = oracle::random_sample(gen, 15 + 41 * i, i);
        const auto s = concroc::preprocess(raw);
        out.push_back({raw, concroc::smooth_fit(concroc::fit_logconcave(s), s)});
    }
    return out;
}

// Direct convolution of the base density with the Gaussian kernel.
double convolved_pdf(const SmoothedFit& sf, double x) {
    const auto& base = sf.base();
    const double g = sf.gamma();
    std::vector<double> breaks = base.knots();
    if (x > base.lower() && x < base.upper()) breaks.push_back(x);
    std::sort(breaks.begin(), breaks.end());
    return oracle::integrate_pieces([&](double y) { return base.pdf(y) * phi_std((x - y) / g) / g; }, breaks);
}

std::vector<double> smoothed_breaks(const SmoothedFit& sf, double reach) {
    std::vector<double> b = sf.base().knots();
    b.insert(b.begin(), sf.base().lower() - reach * sf.gamma());
    b.push_back(sf.base().upper() + reach * sf.gamma());
    return b;
}

}  // namespace

TEST_CASE("zero bandwidth reproduces the base fit") {
    const auto s = concroc::preprocess(std::vector<double>{0.3, 1.1, 1.7, 2.0, 4.2});
    const auto fit = concroc::fit_logconcave(s);
    const SmoothedFit sf(fit, 0.0, 1.0);
    for (double x : {-1.0, 0.3, 0.9, 2.0, 3.3, 4.2, 5.0}) {
        CHECK(sf.pdf(x) == fit.pdf(x));
        CHECK(sf.cdf(x) == fit.cdf(x));
    }
    for (double p : {0.0, 0.1, 0.5, 0.93, 1.0}) CHECK(sf.quantile(p) == fit.quantile(p));
}

TEST_CASE("bandwidth from the two-point sample") {
    const auto s = concroc::preprocess(std::vector<double>{0.0, 0.0, 1.0, 1.0});
    const auto sf = concroc::smooth_fit(concroc::fit_logconcave(s), s);
    CHECK(sf.gamma() * sf.gamma() == doctest::Approx(0.25 - 1.0 / 12.0).epsilon(1e-10));
    CHECK(sf.variance() == doctest::Approx(0.25).epsilon(1e-12));

    // Uniform[0,1] convolved with N(0, g^2) has CDF g (psi(x/g) - psi((x-1)/g)).
    const double g = sf.gamma();
    auto psi = [](double z) { return z * cdf_std(z) + phi_std(z); };
    for (double x : {-1.5, -0.2, 0.0, 0.4, 0.5, 0.99, 1.3, 2.8}) {
        CHECK(std::abs(sf.cdf(x) - g * (psi(x / g) - psi((x - 1.0) / g))) < 1e-12);
        CHECK(std::abs(sf.pdf(x) - (cdf_std(x / g) - cdf_std((x - 1.0) / g))) < 1e-13);
    }
    CHECK(std::abs(sf.quantile(0.5) - 0.5) < 1e-12);
}

TEST_CASE("unbiased convention widens the kernel") {
    const auto s = concroc::preprocess(std::vector<double>{0.0, 0.0, 1.0, 1.0});
    const auto fit = concroc::fit_logconcave(s);
    const auto sf = concroc::smooth_fit(fit, s, concroc::VarianceConvention::Unbiased);
    CHECK(sf.gamma() * sf.gamma() == doctest::Approx(1.0 / 3.0 - 1.0 / 12.0).epsilon(1e-10));
}

TEST_CASE("smooth_fit rejects a fit from other data") {
    const auto s1 = concroc::preprocess(std::vector<double>{0.0, 1.0, 2.5, 3.0});
    const auto s2 = concroc::preprocess(std::vector<double>{0.0, 1.5, 2.0, 3.0});
    const auto s3 = concroc::preprocess(std::vector<double>{0.0, 1.0, 2.5, 3.5});
    const auto fit = concroc::fit_logconcave(s1);
    CHECK_NOTHROW(concroc::smooth_fit(fit, s1));
    try {
        concroc::smooth_fit(fit, s3);
        FAIL("expected MismatchedInputs");
    } catch (const concroc::Error& e) {
        CHECK(e.code() == concroc::ErrorCode::MismatchedInputs);
    }
    if (fit.knots().size() > 2) CHECK_THROWS_AS(concroc::smooth_fit(fit, s2), concroc::Error);
}

TEST_CASE("property: variance matches the sample and the mean is preserved") {
    for (const auto& c : sample_cases(12, 51)) {
        const auto& sf = c.sf;
        const auto m = concroc::moments(concroc::preprocess(c.raw));
        REQUIRE(sf.gamma() > 0.0);
        CHECK(sf.gamma() * sf.gamma() ==
              doctest::Approx(m.var_pop - concroc::fit_moments(sf.base()).var).epsilon(1e-10));
        const auto br = smoothed_breaks(sf, 14.0);
        const double mass = oracle::integrate_pieces([&](double x) { return sf.pdf(x); }, br);
        const double mean = oracle::integrate_pieces([&](double x) { return x * sf.pdf(x); }, br);
        const double var =
            oracle::integrate_pieces([&](double x) { return (x - mean) * (x - mean) * sf.pdf(x); }, br);
        CHECK(std::abs(mass - 1.0) < 1e-8);
        CHECK(std::abs(mean - m.mean) < 1e-8 * (1.0 + std::abs(m.mean)));
        CHECK(std::abs(var - m.var_pop) < 1e-8 * m.var_pop);
    }
}

TEST_CASE("property: pdf matches numerical convolution") {
    std::mt19937_64 gen(77);
    for (const auto& c : sample_cases(6, 52)) {
        const auto& sf = c.sf;
        const double lo = sf.base().lower() - 4.0 * sf.gamma();
        const double hi = sf.base().upper() + 4.0 * sf.gamma();
        std::uniform_real_distribution<double> where(lo, hi);
        for (int i = 0; i < 50; ++i) {
            const double x = where(gen);
            CHECK(std::abs(sf.pdf(x) - convolved_pdf(sf, x)) < 1e-10);
        }
    }
}

TEST_CASE("property: cdf matches quadrature, tails and quantile round trip") {
    std::mt19937_64 gen(78);
    for (const auto& c : sample_cases(6, 53)) {
        const auto& sf = c.sf;
        const double g = sf.gamma();
        const double start = sf.base().lower() - 14.0 * g;
        std::uniform_real_distribution<double> where(sf.base().lower() - 3.0 * g, sf.base().upper() + 3.0 * g);
        for (int i = 0; i < 25; ++i) {
            const double x = where(gen);
            std::vector<double> br{start};
            for (double k : sf.base().knots()) {
                if (k < x) br.push_back(k);
            }
            br.push_back(x);
            const double ref = oracle::integrate_pieces([&](double y) { return sf.pdf(y); }, br);
            CHECK(std::abs(sf.cdf(x) - ref) < 1e-8);
            CHECK(std::abs(sf.sf(x) + sf.cdf(x) - 1.0) < 1e-15);
        }
        // Upper tail keeps relative accuracy where 1 - cdf would round to 0.
        const double far = sf.base().upper() + 9.0 * g;
        const double tail = oracle::integrate_pieces([&](double y) { return sf.pdf(y); },
                                                     {far, far + 2.0 * g, far + 10.0 * g});
        CHECK(sf.sf(far) == doctest::Approx(tail).epsilon(1e-6));
        CHECK(std::abs(sf.cdf(sf.base().upper() + 12.0 * g) - 1.0) < 1e-9);
        CHECK(sf.cdf(sf.base().lower() - 12.0 * g) < 1e-9);

        double prev = 0.0;
        const double lo = sf.base().lower() - 6.0 * g, hi = sf.base().upper() + 6.0 * g;
        for (int i = 0; i <= 1000; ++i) {
            const double v = sf.cdf(lo + (hi - lo) * i / 1000.0);
            CHECK(v >= prev - 1e-15);
            prev = v;
        }
        for (double p : {1e-6, 0.01, 0.1, 0.37, 0.5, 0.8, 0.99, 1 - 1e-6}) {
            CHECK(std::abs(sf.cdf(sf.quantile(p)) - p) < 1e-9);
        }
        CHECK(sf.quantile(0.0) == -std::numeric_limits<double>::infinity());
        CHECK(sf.quantile(1.0) == std::numeric_limits<double>::infinity());
        CHECK_THROWS_AS(sf.quantile(1.01), concroc::Error);
    }
}

TEST_CASE("symmetric sample has its median at the center") {
    const auto s = concroc::preprocess(std::vector<double>{-3.0, -1.2, -0.5, 0.0, 0.5, 1.2, 3.0});
    const auto sf = concroc::smooth_fit(concroc::fit_logconcave(s), s);
    CHECK(std::abs(sf.quantile(0.5)) < 1e-8);
    CHECK(sf.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("property: smoothed density stays log-concave") {
    for (const auto& c : sample_cases(10, 54)) {
        const auto& sf = c.sf;
        const double lo = sf.base().lower() - 6.0 * sf.gamma();
        const double hi = sf.base().upper() + 6.0 * sf.gamma();
        std::vector<double> lp(1000);
        for (int i = 0; i < 1000; ++i) lp[i] = sf.log_pdf(lo + (hi - lo) * i / 999.0);
        double worst = -1.0;
        for (int i = 1; i + 1 < 1000; ++i) worst = std::max(worst, lp[i + 1] - 2.0 * lp[i] + lp[i - 1]);
        CHECK(worst <= 1e-8);
    }
}
