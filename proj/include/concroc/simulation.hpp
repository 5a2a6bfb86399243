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
#include <cstdint>
#include <span>
#include <vector>

#include "concroc/distributions.hpp"
#include "concroc/quantiles.hpp"
#include "concroc/roc.hpp"

namespace concroc {

struct ScenarioSpec {
    int id = 0;  // 0 for user-defined scenarios
    Distribution F;
    std::size_t m;
    Distribution G;
    std::size_t n;
};

// The built-in scenarios 1-12. Throws InvalidParam for other ids.
ScenarioSpec scenario(int id);

// R(t) = 1 - G(F^{-1}(1 - t)) for known distributions.
RocCurve true_roc(const Distribution& F, const Distribution& G);

// Midpoint grid u_k = (k - 0.5) / n_grid, k = 1..n_grid.
std::vector<double> midpoint_grid(std::size_t n_grid = 100);

// Mean squared difference between the curves over the grid. Throws
// EmptyInput for an empty grid.
double ase(const RocCurve& estimate, const RocCurve& truth, std::span<const double> grid);

struct SimOptions {
    std::size_t M = 500;
    std::uint64_t seed = 1;
    std::vector<RocKind> estimators{RocKind::Empirical, RocKind::LogConcave, RocKind::SmoothedLogConcave,
                                    RocKind::Binormal};
    std::size_t n_grid = 100;
    unsigned threads = 0;  // 0 = auto
    EstimatorOptions estimator;
};

struct EstimatorRuns {
    RocKind kind;
    std::vector<double> ase;    // per replication
    std::vector<double> ratio;  // sqrt(ase / ase of the empirical curve)
    Summary ase_summary;
    Summary ratio_summary;
};

struct SimReport {
    int scenario = 0;
    std::size_t M = 0;
    std::uint64_t seed = 0;
    std::vector<double> grid;
    std::vector<EstimatorRuns> estimators;
    std::size_t failed_replications = 0;  // redrawn samples
};

// Monte-Carlo comparison of the estimators against the true curve.
// Replication j, attempt a draws from the stream seeded by
// derive_seed(seed, {id, j, a}); a failed fit redraws. Throws the last fit
// error once more than 5% of M replications have failed.
SimReport run_scenario(const ScenarioSpec& spec, const SimOptions& opts);

}  // namespace concroc
