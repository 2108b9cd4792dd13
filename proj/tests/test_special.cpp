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
#include <random>

#include "doctest.h"

using namespace floq::special;

TEST_CASE("laguerre matches explicit low-order polynomials") {
  // L_0 = 1, L_1^{(a)} = 1+a-x, L_2^{(a)} = x^2/2 - (a+2)x + (a+1)(a+2)/2.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.0, 50.0);
  std::uniform_int_distribution<int> as(0, 10);
  for (int i = 0; i < 50; ++i) {
    double x = xs(rng);
    double a = as(rng);
    CHECK(laguerre(0, a, x) == 1.0);
    CHECK(laguerre(1, a, x) == doctest::Approx(1.0 + a - x).epsilon(1e-13));
    double l2 = 0.5 * x * x - (a + 2.0) * x + 0.5 * (a + 1.0) * (a + 2.0);
    CHECK(laguerre(2, a, x) == doctest::Approx(l2).epsilon(1e-12));
  }
}

TEST_CASE("laguerre_row agrees with single evaluations") {
  auto row = laguerre_row(12, 3.0, 4.5);
  for (int n = 0; n <= 12; ++n) CHECK(row[n] == laguerre(n, 3.0, 4.5));
}

TEST_CASE("1F1 series reproduces exp and terminating polynomials") {
  // 1F1(1;1;z) = e^z.
  auto v = hyp1f1_series(1.0, 1.0, {0.7, -0.3});
  auto e = std::exp(std::complex<double>(0.7, -0.3));
  CHECK(std::abs(v - e) < 1e-13);

  // 1F1(-n; a+1; x) = L_n^{(a)}(x) / C(n+a, n).
  for (int n : {1, 3, 6}) {
    for (double a : {0.0, 2.0}) {
      double x = 3.25;
      double binom = std::exp(std::lgamma(n + a + 1.0) - std::lgamma(a + 1.0) - std::lgamma(n + 1.0));
      double lhs = hyp1f1_series(-n, a + 1.0, {x, 0.0}).real();
      CHECK(lhs == doctest::Approx(laguerre(n, a, x) / binom).epsilon(1e-11));
    }
  }
}

TEST_CASE("Kummer transformation holds numerically for moderate z") {
  // 1F1(a;b;z) = e^z 1F1(b-a;b;-z); exercised where both series converge.
  for (double z : {-8.0, -3.0, 2.5}) {
    auto lhs = hyp1f1_series(3.0, 5.0, {z, 0.0});
    auto rhs = std::exp(z) * hyp1f1_series(2.0, 5.0, {-z, 0.0});
    CHECK(std::abs(lhs - rhs) < 1e-11 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("sqrt_factorial_ratio against direct factorials") {
  CHECK(sqrt_factorial_ratio(0, 0) == doctest::Approx(1.0));
  CHECK(sqrt_factorial_ratio(2, 5) == doctest::Approx(std::sqrt(2.0 / 120.0)).epsilon(1e-14));
  CHECK(sqrt_factorial_ratio(4, 4) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly and Gaussians well") {
  const auto& gl = gauss_legendre(12);
  // degree-23 exactness: integrate x^10 over [-1,1] = 2/11.
  double s = 0.0;
  for (int i = 0; i < 12; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 10);
  CHECK(s == doctest::Approx(2.0 / 11.0).epsilon(1e-13));

  const auto& g2 = gauss_legendre(60);
  // int_0^6 e^{-r^2/2} dr = sqrt(pi/2) erf(6/sqrt(2)).
  double v = 0.0;
  for (int i = 0; i < 60; ++i) {
    double r = 3.0 * (g2.nodes[i] + 1.0);
    v += 3.0 * g2.weights[i] * std::exp(-0.5 * r * r);
  }
  double expect = std::sqrt(3.141592653589793 / 2.0) * std::erf(6.0 / std::sqrt(2.0));
  CHECK(v == doctest::Approx(expect).epsilon(1e-12));
}
