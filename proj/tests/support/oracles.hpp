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

// Independent reference computations used only by the tests. Nothing here
// calls into the closed-form segment integrals of the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

// Adaptive Gauss-Kronrod over [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11) {
    if (!(b > a)) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 12, tol, &err);
}

// Integral over [breaks.front(), breaks.back()], split at every break.
inline double integrate_pieces(const std::function<double(double)>& f,
                               const std::vector<double>& breaks, double tol = 1e-11) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) total += integrate(f, breaks[i], breaks[i + 1], tol);
    return total;
}

// Integral of exp on the segment with endpoint values (a, b), length 1.
inline double seg_exp(double a, double b) {
    const double d = b - a;
    if (std::abs(d) < 1e-3) {
        double term = 1.0, sum = 1.0;
        for (int m = 1; m < 12; ++m) {
            term *= d / (m + 1);
            sum += term;
        }
        return std::exp(a) * sum;
    }
    return (std::exp(b) - std::exp(a)) / d;
}

// \int_0^1 t exp((1-t)a + tb) dt, by series for small |b-a|.
inline double seg_texp(double a, double b) {
    const double d = b - a;
    if (std::abs(d) < 1e-2) {
        double term = 1.0, sum = 0.5;
        for (int m = 1; m < 14; ++m) {
            term *= d / m;
            sum += term / (m + 2);
        }
        return std::exp(a) * sum;
    }
    return (std::exp(b) * (d - 1.0) + std::exp(a)) / (d * d);
}

// Unconstrained log-likelihood sum w_i phi_i - \int exp(phi).
inline double loglik(const std::vector<double>& x, const std::vector<double>& w,
                     const std::vector<double>& phi) {
    double v = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) v += w[i] * phi[i];
    for (std::size_t i = 0; i + 1 < x.size(); ++i) v -= (x[i + 1] - x[i]) * seg_exp(phi[i], phi[i + 1]);
    return v;
}

// Maximizes the log-likelihood over concave phi by accelerated projected
// gradient ascent in the cone parametrization
//   phi(x) = alpha + beta (x - x_1) - sum_j c_j (x - x_j)_+,  c_j >= 0,
// where the projection is a clamp. Returns the attained objective.
inline double projected_gradient_max(const std::vector<double>& x, const std::vector<double>& w,
                                     long iterations = 1000000) {
    const std::size_t k = x.size();
    const std::size_t dim = k;  // alpha, beta, c_2..c_{k-1}
    const double range = x.back() - x.front();

    auto to_phi = [&](const std::vector<double>& th) {
        std::vector<double> phi(k);
        for (std::size_t i = 0; i < k; ++i) {
            double v = th[0] + th[1] * (x[i] - x[0]);
            for (std::size_t j = 1; j + 1 < k; ++j) v -= th[j + 1] * std::max(0.0, x[i] - x[j]);
            phi[i] = v;
        }
        return phi;
    };
    auto gradient = [&](const std::vector<double>& th) {
        const std::vector<double> phi = to_phi(th);
        std::vector<double> g(k);
        for (std::size_t i = 0; i < k; ++i) g[i] = w[i];
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const double len = x[i + 1] - x[i];
            g[i] -= len * seg_texp(phi[i + 1], phi[i]);
            g[i + 1] -= len * seg_texp(phi[i], phi[i + 1]);
        }
        std::vector<double> out(dim, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
            out[0] += g[i];
            out[1] += g[i] * (x[i] - x[0]);
            for (std::size_t j = 1; j + 1 < k; ++j) out[j + 1] -= g[i] * std::max(0.0, x[i] - x[j]);
        }
        return out;
    };
    auto objective = [&](const std::vector<double>& th) { return loglik(x, w, to_phi(th)); };
    auto project = [&](std::vector<double>& th) {
        for (std::size_t j = 2; j < dim; ++j) th[j] = std::max(0.0, th[j]);
    };

    std::vector<double> cur(dim, 0.0);
    cur[0] = -std::log(range);
    std::vector<double> prev = cur, y = cur;
    double step = 0.25 / (1.0 + static_cast<double>(k) * range * range);
    double tk = 1.0;
    double best = objective(cur);
    for (long it = 0; it < iterations; ++it) {
        const std::vector<double> g = gradient(y);
        std::vector<double> next(dim);
        for (std::size_t j = 0; j < dim; ++j) next[j] = y[j] + step * g[j];
        project(next);
        const double val = objective(next);
        if (!std::isfinite(val) || val < best) {
            // Adaptive restart: drop momentum, and shrink the step if even a
            // plain gradient step from the incumbent fails.
            if (y == cur) step *= 0.5;
            y = cur;
            tk = 1.0;
            continue;
        }
        best = val;
        const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * tk * tk));
        prev = cur;
        cur = next;
        for (std::size_t j = 0; j < dim; ++j) y[j] = cur[j] + (tk - 1.0) / tn * (cur[j] - prev[j]);
        tk = tn;
    }
    return best;
}

// Brute-force Mann-Whitney: (#{y > x} + #{y == x}/2) / (m n), as twice the
// count in integer arithmetic.
inline double mann_whitney(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::int64_t twice = 0;
    for (double x : xs) {
        for (double y : ys) {
            if (y > x) twice += 2;
            else if (y == x) twice += 1;
        }
    }
    return static_cast<double>(twice) / (2.0 * static_cast<double>(xs.size() * ys.size()));
}

// Random samples from a handful of families, with optional rounding to
// force ties.
inline std::vector<double> random_sample(std::mt19937_64& gen, std::size_t n, int family,
                                         double round_to = 0.0) {
    std::vector<double> out(n);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::gamma_distribution<double> gamma(2.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::exponential_distribution<double> expo(1.0);
    std::student_t_distribution<double> student(3.0);
    for (auto& v : out) {
        switch (family % 5) {
            case 0: v = normal(gen); break;
            case 1: v = gamma(gen); break;
            case 2: v = unif(gen); break;
            case 3: v = 3.0 + 2.0 * expo(gen); break;
            default: v = student(gen); break;
        }
        if (round_to > 0.0) v = std::round(v / round_to) * round_to;
    }
    return out;
}

}  // namespace oracle
