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

#include "concroc/logconcave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "concroc/errors.hpp"
#include "concroc/jfunc.hpp"

namespace concroc {

void SolverOptions::validate() const {
    if (!(grad_tol > 0.0)) throw Error(ErrorCode::InvalidParam, "grad_tol must be positive");
    if (max_iter < 1) throw Error(ErrorCode::InvalidParam, "max_iter must be at least 1");
    if (!(newton_damping > 0.0 && newton_damping < 1.0)) {
        throw Error(ErrorCode::InvalidParam, "newton_damping must lie in (0,1)");
    }
}

// ---------------------------------------------------------------------------
// LogConcaveFit

LogConcaveFit::LogConcaveFit(std::vector<double> knots, std::vector<double> phi, double objective)
    : knots_(std::move(knots)), phi_(std::move(phi)), objective_(objective) {
    if (knots_.size() < 2) throw Error(ErrorCode::InvalidParam, "a fit needs at least two knots");
    if (knots_.size() != phi_.size()) throw Error(ErrorCode::LengthMismatch, "knots and phi differ in length");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i]) || !std::isfinite(phi_[i])) {
            throw Error(ErrorCode::NonFiniteValue, "fit contains non-finite knots or phi");
        }
        if (i > 0 && !(knots_[i] > knots_[i - 1])) {
            throw Error(ErrorCode::InvalidParam, "knots must be strictly increasing");
        }
    }
    const std::size_t nseg = knots_.size() - 1;
    slopes_.resize(nseg);
    for (std::size_t j = 0; j < nseg; ++j) {
        slopes_[j] = (phi_[j + 1] - phi_[j]) / (knots_[j + 1] - knots_[j]);
    }
    for (std::size_t j = 1; j < nseg; ++j) {
        const double scale = 1.0 + std::max(std::abs(slopes_[j]), std::abs(slopes_[j - 1]));
        if (slopes_[j] - slopes_[j - 1] > 1e-8 * scale) {
            throw Error(ErrorCode::InvalidParam, "phi is not concave at knot " + std::to_string(j));
        }
    }
    cum_.resize(knots_.size());
    cum_[0] = 0.0;
    for (std::size_t j = 0; j < nseg; ++j) {
        cum_[j + 1] = cum_[j] + (knots_[j + 1] - knots_[j]) * j_fn(phi_[j], phi_[j + 1]);
    }
}

std::size_t LogConcaveFit::segment_of(double x) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    std::size_t j = static_cast<std::size_t>(it - knots_.begin());
    j = j == 0 ? 0 : j - 1;
    return std::min(j, knots_.size() - 2);
}

double LogConcaveFit::log_density(double x) const {
    if (x < knots_.front() || x > knots_.back()) return -std::numeric_limits<double>::infinity();
    const std::size_t j = segment_of(x);
    return phi_[j] + slopes_[j] * (x - knots_[j]);
}

double LogConcaveFit::pdf(double x) const {
    if (x < knots_.front() || x > knots_.back()) return 0.0;
    return std::exp(log_density(x));
}

double LogConcaveFit::cdf(double x) const {
    if (x <= knots_.front()) return 0.0;
    if (x >= knots_.back()) return 1.0;
    const std::size_t j = segment_of(x);
    const double h = x - knots_[j];
    const double v = cum_[j] + h * j_fn(phi_[j], phi_[j] + slopes_[j] * h);
    return std::min(v, 1.0);
}

double LogConcaveFit::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "quantile: p outside [0,1]");
    if (p == 0.0) return knots_.front();
    if (p == 1.0) return knots_.back();
    auto it = std::upper_bound(cum_.begin(), cum_.end(), p);
    std::size_t j = static_cast<std::size_t>(it - cum_.begin());
    j = j == 0 ? 0 : j - 1;
    j = std::min(j, knots_.size() - 2);

    // Invert e^a (e^{s h} - 1) / s = q for h.
    const double q = p - cum_[j];
    const double scaled = q * std::exp(-phi_[j]);
    const double z = scaled * slopes_[j];
    double h;
    if (z <= -1.0) {
        h = knots_[j + 1] - knots_[j];
    } else {
        h = z == 0.0 ? scaled : scaled * (std::log1p(z) / z);
    }
    return std::clamp(knots_[j] + h, knots_[j], knots_[j + 1]);
}

// ---------------------------------------------------------------------------
// Likelihood

double log_likelihood(const WeightedSample& s, std::span<const double> phi) {
    const auto& x = s.values();
    const auto& w = s.weights();
    if (phi.size() != x.size()) {
        throw Error(ErrorCode::LengthMismatch, "phi has " + std::to_string(phi.size()) +
                                                   " entries, sample has " + std::to_string(x.size()));
    }
    double lin = 0.0, integral = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) lin += w[i] * phi[i];
    for (std::size_t i = 0; i + 1 < x.size(); ++i) integral += (x[i + 1] - x[i]) * j_fn(phi[i], phi[i + 1]);
    return lin - integral;
}

// ---------------------------------------------------------------------------
// Active-set solver

namespace {

// Solves the symmetric tridiagonal system with diagonal `d`, off-diagonal
// `e` (e[i] couples i and i+1) in place of `rhs`.
void solve_tridiagonal(std::vector<double> d, std::vector<double> e, std::vector<double>& rhs) {
    const std::size_t n = d.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = e[i - 1] / d[i - 1];
        d[i] -= m * e[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - e[i] * rhs[i + 1]) / d[i];
    }
}

class ActiveSetSolver {
public:
    ActiveSetSolver(const WeightedSample& s, const SolverOptions& opts)
        : x_(s.values()), w_(s.weights()), opts_(opts) {}

    LogConcaveFit run();

private:
    // Problem restricted to knot set `knots` (indices into x_), parameters
    // theta = phi at the knots.
    struct Restricted {
        std::vector<std::size_t> knots;
        std::vector<double> pos;      // x at the knots
        std::vector<double> weights;  // aggregated weights
    };

    Restricted restrict_to(std::vector<std::size_t> knots) const;
    double value(const Restricted& r, const std::vector<double>& theta) const;
    void newton(const Restricted& r, std::vector<double>& theta) const;
    std::vector<double> slope_changes(const Restricted& r, const std::vector<double>& theta) const;
    std::vector<double> interpolate(const Restricted& r, const std::vector<double>& theta) const;
    // Directional derivatives of L along a new concave kink at each x_j.
    std::vector<double> kink_derivatives(const std::vector<double>& phi) const;

    void count_iteration() {
        if (++iterations_ > opts_.max_iter) {
            throw Error(ErrorCode::MaxIterExceeded,
                        "active-set solver exceeded " + std::to_string(opts_.max_iter) + " iterations");
        }
    }

    const std::vector<double>& x_;
    const std::vector<double>& w_;
    SolverOptions opts_;
    int iterations_ = 0;
};

ActiveSetSolver::Restricted ActiveSetSolver::restrict_to(std::vector<std::size_t> knots) const {
    Restricted r;
    r.knots = std::move(knots);
    r.pos.resize(r.knots.size());
    r.weights.assign(r.knots.size(), 0.0);
    for (std::size_t p = 0; p < r.knots.size(); ++p) r.pos[p] = x_[r.knots[p]];
    std::size_t p = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
        while (p + 1 < r.knots.size() - 1 && i > r.knots[p + 1]) ++p;
        if (i == r.knots[p]) {
            r.weights[p] += w_[i];
        } else if (i == r.knots[p + 1]) {
            r.weights[p + 1] += w_[i];
        } else {
            const double lambda = (x_[i] - r.pos[p]) / (r.pos[p + 1] - r.pos[p]);
            r.weights[p] += (1.0 - lambda) * w_[i];
            r.weights[p + 1] += lambda * w_[i];
        }
    }
    return r;
}

double ActiveSetSolver::value(const Restricted& r, const std::vector<double>& theta) const {
    double v = 0.0;
    for (std::size_t p = 0; p < theta.size(); ++p) v += r.weights[p] * theta[p];
    for (std::size_t p = 0; p + 1 < theta.size(); ++p) {
        v -= (r.pos[p + 1] - r.pos[p]) * j_fn(theta[p], theta[p + 1]);
    }
    return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
}

void ActiveSetSolver::newton(const Restricted& r, std::vector<double>& theta) const {
    const std::size_t q = theta.size();
    std::vector<double> grad(q), diag(q), off(q - 1), step(q), cand(q);
    double current = value(r, theta);
    int polish = 0;

    for (int it = 0; it < 200; ++it) {
        for (std::size_t p = 0; p < q; ++p) {
            grad[p] = r.weights[p];
            diag[p] = 0.0;
        }
        for (std::size_t p = 0; p + 1 < q; ++p) {
            const double len = r.pos[p + 1] - r.pos[p];
            const double a = theta[p], b = theta[p + 1];
            grad[p] -= len * j_a(a, b);
            grad[p + 1] -= len * j_b(a, b);
            diag[p] += len * j_aa(a, b);
            diag[p + 1] += len * j_bb(a, b);
            off[p] = len * j_ab(a, b);
        }
        double gmax = 0.0;
        for (double g : grad) gmax = std::max(gmax, std::abs(g));
        if (gmax <= 1e-14) return;

        step = grad;
        solve_tridiagonal(diag, off, step);
        double decrement = 0.0;
        for (std::size_t p = 0; p < q; ++p) decrement += grad[p] * step[p];
        if (!(decrement > 1e-30)) return;

        // Inside the quadratic region the predicted gain is below the
        // rounding of L itself, so the line search cannot tell steps apart;
        // plain Newton steps finish the job.
        if (decrement < 1e-12 * (1.0 + std::abs(current))) {
            if (++polish > 3) return;
            for (std::size_t p = 0; p < q; ++p) theta[p] += step[p];
            current = value(r, theta);
            continue;
        }

        double t = 1.0;
        bool accepted = false;
        for (int h = 0; h <= 60; ++h) {
            for (std::size_t p = 0; p < q; ++p) cand[p] = theta[p] + t * step[p];
            const double v = value(r, cand);
            if (v > current) {
                theta = cand;
                current = v;
                accepted = true;
                break;
            }
            t *= opts_.newton_damping;
        }
        if (!accepted) {
            if (gmax <= opts_.grad_tol) return;
            throw Error(ErrorCode::MaxIterExceeded, "Newton line search failed after 60 halvings");
        }
    }
}

std::vector<double> ActiveSetSolver::slope_changes(const Restricted& r,
                                                   const std::vector<double>& theta) const {
    const std::size_t q = theta.size();
    std::vector<double> c(q, 0.0);
    for (std::size_t p = 1; p + 1 < q; ++p) {
        const double left = (theta[p] - theta[p - 1]) / (r.pos[p] - r.pos[p - 1]);
        const double right = (theta[p + 1] - theta[p]) / (r.pos[p + 1] - r.pos[p]);
        c[p] = left - right;
    }
    return c;
}

std::vector<double> ActiveSetSolver::interpolate(const Restricted& r,
                                                 const std::vector<double>& theta) const {
    std::vector<double> phi(x_.size());
    for (std::size_t p = 0; p + 1 < r.knots.size(); ++p) {
        const std::size_t lo = r.knots[p], hi = r.knots[p + 1];
        const double slope = (theta[p + 1] - theta[p]) / (r.pos[p + 1] - r.pos[p]);
        for (std::size_t i = lo; i < hi; ++i) phi[i] = theta[p] + slope * (x_[i] - r.pos[p]);
    }
    phi.back() = theta.back();
    return phi;
}

std::vector<double> ActiveSetSolver::kink_derivatives(const std::vector<double>& phi) const {
    // H_j = \int_{x_j} (x - x_j) e^phi dx - sum_{i > j} w_i (x_i - x_j),
    // accumulated from the right using gaps only.
    const std::size_t k = x_.size();
    std::vector<double> out(k, 0.0);
    double mass_right = 0.0, first_moment = 0.0;    // over [x_{j+1}, x_k]
    double weight_right = 0.0, weight_moment = 0.0;  // over points > j
    for (std::size_t j = k - 1; j-- > 0;) {
        const double gap = x_[j + 1] - x_[j];
        weight_right += w_[j + 1];
        first_moment += gap * gap * j_b(phi[j], phi[j + 1]) + gap * mass_right;
        mass_right += gap * j_fn(phi[j], phi[j + 1]);
        weight_moment += gap * weight_right;
        out[j] = first_moment - weight_moment;
    }
    return out;
}

LogConcaveFit ActiveSetSolver::run() {
    const std::size_t k = x_.size();
    std::vector<std::size_t> knots{0, k - 1};
    Restricted r = restrict_to(knots);
    std::vector<double> theta(2, -std::log(x_.back() - x_.front()));
    newton(r, theta);

    while (true) {
        count_iteration();
        const std::vector<double> phi = interpolate(r, theta);
        const std::vector<double> deriv = kink_derivatives(phi);

        std::size_t best = k;
        double best_value = 0.0;
        std::size_t p = 0;
        for (std::size_t j = 1; j + 1 < k; ++j) {
            while (r.knots[p + 1] <= j) ++p;
            if (r.knots[p] == j) continue;
            const double gap = std::min(x_[j] - x_[j - 1], x_[j + 1] - x_[j]);
            if (deriv[j] > opts_.grad_tol * gap && deriv[j] > best_value) {
                best = j;
                best_value = deriv[j];
            }
        }
        if (best == k) break;

        std::vector<std::size_t> trial_knots = r.knots;
        trial_knots.insert(std::upper_bound(trial_knots.begin(), trial_knots.end(), best), best);
        Restricted trial = restrict_to(trial_knots);
        std::vector<double> feasible(trial.knots.size());
        for (std::size_t q = 0; q < trial.knots.size(); ++q) feasible[q] = phi[trial.knots[q]];

        while (true) {
            std::vector<double> candidate = feasible;
            newton(trial, candidate);
            const std::vector<double> c_new = slope_changes(trial, candidate);
            std::size_t worst = 0;
            double t_min = 1.0;
            const std::vector<double> c_old = slope_changes(trial, feasible);
            for (std::size_t q = 1; q + 1 < candidate.size(); ++q) {
                if (c_new[q] >= 0.0) continue;
                const double t = std::clamp(c_old[q] / (c_old[q] - c_new[q]), 0.0, 1.0);
                if (worst == 0 || t < t_min) {
                    worst = q;
                    t_min = t;
                }
            }
            if (worst == 0) {
                feasible = std::move(candidate);
                break;
            }
            count_iteration();
            for (std::size_t q = 0; q < feasible.size(); ++q) {
                feasible[q] += t_min * (candidate[q] - feasible[q]);
            }
            trial_knots.erase(trial_knots.begin() + static_cast<std::ptrdiff_t>(worst));
            feasible.erase(feasible.begin() + static_cast<std::ptrdiff_t>(worst));
            trial = restrict_to(trial_knots);
        }

        // The new knot was dropped again without changing the knot set: the
        // remaining violation is at rounding level.
        const bool unchanged = trial.knots == r.knots;
        r = std::move(trial);
        theta = std::move(feasible);
        if (unchanged) break;
    }

    // Renormalize so the mass is 1 to rounding.
    double mass = 0.0;
    for (std::size_t p = 0; p + 1 < theta.size(); ++p) mass += (r.pos[p + 1] - r.pos[p]) * j_fn(theta[p], theta[p + 1]);
    const double shift = std::log(mass);
    for (double& v : theta) v = (v - shift) + 0.0;  // no negative zeros

    const double objective = value(r, theta);
    return LogConcaveFit(r.pos, theta, objective);
}

}  // namespace

LogConcaveFit fit_logconcave(const WeightedSample& s, const SolverOptions& opts) {
    opts.validate();
    return ActiveSetSolver(s, opts).run();
}

// ---------------------------------------------------------------------------
// Moments and sampling

FitMoments fit_moments(const LogConcaveFit& fit) {
    const auto& x = fit.knots();
    const auto& phi = fit.phi();
    double mass = 0.0, first = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double len = x[j + 1] - x[j];
        const double m0 = len * j_fn(phi[j], phi[j + 1]);
        mass += m0;
        first += x[j] * m0 + len * len * j_b(phi[j], phi[j + 1]);
    }
    FitMoments out;
    out.mean = first / mass;
    double second = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double len = x[j + 1] - x[j];
        const double a = phi[j], b = phi[j + 1];
        const double c = x[j] - out.mean;
        second += len * (c * c * j_fn(a, b) + 2.0 * c * len * j_b(a, b) + len * len * j_bb(a, b));
    }
    out.var = second / mass;
    return out;
}

std::vector<double> sample_from_fit(const LogConcaveFit& fit, std::size_t count,
                                    const std::function<double()>& uniform01) {
    std::vector<double> out(count);
    for (auto& v : out) v = fit.quantile(uniform01());
    return out;
}

std::vector<double> sample_from_fit(const LogConcaveFit& fit, std::size_t count, Stream& rng) {
    return sample_from_fit(fit, count, [&rng] { return rng.uniform(); });
}

}  // namespace concroc
