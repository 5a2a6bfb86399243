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

#include "concroc/simulation.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "concroc/errors.hpp"
#include "concroc/parallel.hpp"

namespace concroc {

ScenarioSpec scenario(int id) {
    using D = Distribution;
    const auto mixture = [] { return D::normal_mixture({0.75, 0.25}, {{2.5, 1.0}, {2.5, 3.0}}); };
    switch (id) {
        case 1: return {1, D::normal(0, 1), 20, D::normal(1, 1), 20};
        case 2: return {2, D::normal(0, 1), 100, D::normal(1, 1), 100};
        case 3: return {3, D::normal(0, 1), 100, D::normal(2, 1.2), 100};
        case 4: return {4, D::normal(2, 1), 100, D::gamma(2, 1), 100};
        case 5: return {5, D::gamma(2, 1), 100, D::gamma(4, 1.5), 100};
        case 6: return {6, D::logistic(0, 1), 100, D::logistic(2, 1), 100};
        case 7: return {7, D::lomax(3, 7), 20, D::lomax(5, 3), 20};
        case 8: return {8, D::lomax(3, 7), 100, D::lomax(5, 3), 100};
        case 9: return {9, D::student_t(5, 0), 20, D::student_t(5, 2), 20};
        case 10: return {10, D::student_t(5, 0), 100, D::student_t(5, 2), 100};
        case 11: return {11, D::normal(0, 1), 20, mixture(), 20};
        case 12: return {12, D::normal(0, 1), 100, mixture(), 100};
        default: break;
    }
    throw Error(ErrorCode::InvalidParam, "scenario id must be in 1..12, got " + std::to_string(id));
}

RocCurve true_roc(const Distribution& F, const Distribution& G) {
    return RocCurve(RocKind::TrueParametric,
                    CdfModel{[F](double x) { return F.cdf(x); }, [F](double p) { return F.quantile(p); }},
                    CdfModel{[G](double x) { return G.cdf(x); }, [G](double p) { return G.quantile(p); }});
}

std::vector<double> midpoint_grid(std::size_t n_grid) {
    std::vector<double> g(n_grid);
    for (std::size_t k = 0; k < n_grid; ++k) g[k] = (static_cast<double>(k) + 0.5) / static_cast<double>(n_grid);
    return g;
}

double ase(const RocCurve& estimate, const RocCurve& truth, std::span<const double> grid) {
    if (grid.empty()) throw Error(ErrorCode::EmptyInput, "ASE grid is empty");
    double sum = 0.0;
    for (double u : grid) {
        const double d = estimate.eval(u) - truth.eval(u);
        sum += d * d;
    }
    return sum / static_cast<double>(grid.size());
}

namespace {

struct Replication {
    std::vector<double> ase;  // per requested estimator
    double empirical_ase = 0.0;
    std::size_t failures = 0;
    std::optional<Error> error;
};

}  // namespace

SimReport run_scenario(const ScenarioSpec& spec, const SimOptions& opts) {
    if (opts.M < 1) throw Error(ErrorCode::InvalidParam, "M must be at least 1");
    if (opts.n_grid < 1) throw Error(ErrorCode::InvalidParam, "grid size must be at least 1");
    if (spec.m < 2 || spec.n < 2) throw Error(ErrorCode::InvalidParam, "scenario sample sizes must be at least 2");
    for (RocKind k : opts.estimators) {
        if (k == RocKind::TrueParametric) throw Error(ErrorCode::InvalidParam, "the true curve is not an estimator");
    }

    const auto grid = midpoint_grid(opts.n_grid);
    const RocCurve truth = true_roc(spec.F, spec.G);
    const std::size_t allowed = opts.M / 20;  // 5% of M
    const auto scenario_key = static_cast<std::uint64_t>(spec.id);

    std::vector<Replication> reps(opts.M);
    parallel_for(opts.M, opts.threads, [&](std::size_t j) {
        Replication& r = reps[j];
        for (std::uint64_t attempt = 0;; ++attempt) {
            Stream rng(derive_seed(opts.seed, {scenario_key, j, attempt}));
            const auto x = spec.F.sample(spec.m, rng);
            const auto y = spec.G.sample(spec.n, rng);
            try {
                r.empirical_ase = ase(empirical_roc(x, y), truth, grid);
                r.ase.clear();
                for (RocKind k : opts.estimators) {
                    r.ase.push_back(k == RocKind::Empirical ? r.empirical_ase
                                                            : ase(estimate_roc(k, x, y, opts.estimator), truth, grid));
                }
                return;
            } catch (const Error& e) {
                ++r.failures;
                r.error = e;
                if (r.failures > allowed) return;
            }
        }
    });

    SimReport report;
    report.scenario = spec.id;
    report.M = opts.M;
    report.seed = opts.seed;
    report.grid = grid;
    for (const auto& r : reps) report.failed_replications += r.failures;
    if (report.failed_replications > allowed) {
        for (const auto& r : reps) {
            if (r.error) {
                throw Error(r.error->code(), "more than 5% of replications failed: " + std::string(r.error->what()));
            }
        }
        throw Error(ErrorCode::MaxIterExceeded, "more than 5% of replications failed");
    }

    for (std::size_t e = 0; e < opts.estimators.size(); ++e) {
        EstimatorRuns runs;
        runs.kind = opts.estimators[e];
        for (const auto& r : reps) {
            const double a = r.ase[e];
            runs.ase.push_back(a);
            double ratio;
            if (a == r.empirical_ase) ratio = 1.0;
            else if (r.empirical_ase == 0.0) ratio = std::numeric_limits<double>::infinity();
            else ratio = std::sqrt(a / r.empirical_ase);
            runs.ratio.push_back(ratio);
        }
        runs.ase_summary = summarize(runs.ase);
        runs.ratio_summary = summarize(runs.ratio);
        report.estimators.push_back(std::move(runs));
    }
    return report;
}

}  // namespace concroc
