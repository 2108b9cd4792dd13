// Copyright 2026 The floq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLOQ_SPECIAL_HPP
#define FLOQ_SPECIAL_HPP

#include <complex>
#include <vector>

namespace floq::special {

/// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the standard
/// three-term recurrence. Exact finite computation, stable for the
/// n <= ~200, x <= ~1000 range used here.
double laguerre(int n, double alpha, double x);

/// All of L_0^{(alpha)}(x) .. L_nmax^{(alpha)}(x) in one recurrence pass.
std::vector<double> laguerre_row(int nmax, double alpha, double x);

/// sqrt(lo! / hi!) for 0 <= lo <= hi, computed through lgamma so large
/// factorials never materialize.
double sqrt_factorial_ratio(int lo, int hi);

/// Kummer confluent hypergeometric function 1F1(a; b; z) by direct Taylor
/// series. Intended for modest |z| and as an independent cross-check of the
/// terminating (polynomial) evaluations; throws if the series fails to
/// converge within `max_terms`.
std::complex<double> hyp1f1_series(double a, double b, std::complex<double> z,
                                   double tol = 1e-15, int max_terms = 500);

/// Gauss-Legendre nodes/weights on [-1, 1]. Results are cached per n.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n);

}  // namespace floq::special

#endif  // FLOQ_SPECIAL_HPP
