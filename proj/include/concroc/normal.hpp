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

namespace concroc {

// Standard normal density, CDF and quantile. normal_quantile(0) = -inf and
// normal_quantile(1) = +inf.
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);

// log(1 - Phi(z)), accurate far into the upper tail.
double log_normal_sf(double z);

// log(Phi(upper) - Phi(lower)); -inf when upper <= lower.
double log_normal_diff(double upper, double lower);

}  // namespace concroc
