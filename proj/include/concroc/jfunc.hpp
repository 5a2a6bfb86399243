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

// J(a, b) = \int_0^1 exp((1-t) a + t b) dt = (e^b - e^a) / (b - a).
//
// Every segment integral of the piecewise-linear log-density reduces to J
// and its partial derivatives: the mass of a segment of length d with
// endpoint log-densities (a, b) is d * J(a, b), and the gradient and
// Hessian of the log-likelihood need the first and second partials.
double j_fn(double a, double b);

// Partial derivative d^{i+j} J / da^i db^j for i + j in {1, 2}. Throws
// UnsupportedOrder for any other order.
double j_partial(double a, double b, int order_a, int order_b);

// Named partials. j_b(a, b) = \int t e^{...}, j_bb = \int t^2 e^{...},
// j_ab = \int t (1-t) e^{...}; the a-side partials follow by symmetry.
double j_a(double a, double b);
double j_b(double a, double b);
double j_aa(double a, double b);
double j_ab(double a, double b);
double j_bb(double a, double b);

}  // namespace concroc
