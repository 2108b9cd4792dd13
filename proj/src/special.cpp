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

#include "floq/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace floq::special {

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;              // L_0
  double l = 1.0 + alpha - x;    // L_1
  for (int j = 1; j < n; ++j) {
    double lp1 = ((2.0 * j + 1.0 + alpha - x) * l - (j + alpha) * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

std::vector<double> laguerre_row(int nmax, double alpha, double x) {
  std::vector<double> out(static_cast<size_t>(nmax) + 1);
  out[0] = 1.0;
  if (nmax == 0) return out;
  out[1] = 1.0 + alpha - x;
  for (int j = 1; j < nmax; ++j) {
    out[j + 1] = ((2.0 * j + 1.0 + alpha - x) * out[j] - (j + alpha) * out[j - 1]) / (j + 1.0);
  }
  return out;
}

double sqrt_factorial_ratio(int lo, int hi) {
  if (lo < 0 || hi < lo) throw std::invalid_argument("sqrt_factorial_ratio: need 0 <= lo <= hi");
  return std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)));
}

std::complex<double> hyp1f1_series(double a, double b, std::complex<double> z,
                                   double tol, int max_terms) {
  if (b <= 0.0 && b == std::floor(b)) {
    throw std::invalid_argument("hyp1f1_series: b is a non-positive integer");
  }
  std::complex<double> term(1.0, 0.0);
  std::complex<double> sum = term;
  for (int j = 0; j < max_terms; ++j) {
    term *= (a + j) / (b + j) * z / (j + 1.0);
    sum += term;
    if (std::abs(term) <= tol * (1.0 + std::abs(sum))) return sum;
    // Terminating series: a a non-positive integer makes all later terms 0.
    if (a + j == 0.0 || (a < 0 && a == std::floor(a) && j >= -a)) return sum;
  }
  throw std::runtime_error("hyp1f1_series: no convergence (|z| too large?)");
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Legendre P_n and derivative via recurrence; used by the Newton solve below.
std::pair<double, double> legendre_pd(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int j = 1; j < n; ++j) {
    double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
    p0 = p1;
    p1 = p2;
  }
  double d = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, d};
}

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_pd(n, x);
      double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, d] = legendre_pd(n, x);
    (void)p;
    double w = 2.0 / ((1.0 - x * x) * d * d);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::map<int, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

}  // namespace floq::special
