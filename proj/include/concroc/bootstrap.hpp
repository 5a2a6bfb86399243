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

#include "concroc/roc.hpp"

namespace concroc {

struct BootSpec {
    std::vector<double> t_list{0.1, 0.3, 0.5, 0.7, 0.9};
    std::size_t B = 500;
    double alpha = 0.05;
    std::uint64_t seed = 1;
    RocKind method = RocKind::LogConcave;
    unsigned threads = 0;  // 0 = auto
    EstimatorOptions estimator;

    // Throws InvalidParam.
    void validate() const;
};

struct BootPoint {
    double t = 0.0;
    double estimate = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct BootResult {
    std::vector<BootPoint> points;
    std::size_t replicates = 0;
    std::size_t redraws = 0;  // degenerate resamples drawn again
};

// Percentile bootstrap intervals for R(t). Replicate b resamples both groups
// with replacement from the stream seeded by derive_seed(seed, {b}); a
// resample with fewer than two distinct values in either group is drawn
// again, and 100 consecutive such draws raise ResampleDegenerate. The
// result does not depend on the worker count.
BootResult boot_ci(std::span<const double> controls, std::span<const double> cases, const BootSpec& spec);

}  // namespace concroc
