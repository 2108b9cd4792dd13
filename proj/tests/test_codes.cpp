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

#include "floq/codes.hpp"

#include <cmath>

#include "doctest.h"
#include "floq/fock.hpp"

using namespace floq;
using namespace floq::codes;

TEST_CASE("binomial code: exact amplitudes, orthogonality, photon number") {
  FockSpace s{16, 1.0, 0};
  auto c = binomial_code(s);
  CHECK(c.zero_l.amp(4).real() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(c.zero_l.amp(0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(c.zero_l.amp.dot(c.one_l.amp)) == 0.0);  // disjoint Fock support
  CHECK(fock::mean_photon(c.zero_l) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(fock::mean_photon(c.one_l) == doctest::Approx(3.0).epsilon(1e-14));

  FockSpace tiny{6, 1.0, 0};
  CHECK_THROWS(binomial_code(tiny));
}

TEST_CASE("cat code: mod-4 support, analytic normalization, sweet spot") {
  FockSpace s{32, 1.0, 16};
  auto c = cat_code(s);
  CHECK(c.alpha == doctest::Approx(2.3447));
  for (int n = 0; n < 32; ++n) {
    if (n % 4 != 0) CHECK(std::abs(c.zero_l.amp(n)) < 1e-10);
    if (n % 4 != 2) CHECK(std::abs(c.one_l.amp(n)) < 1e-10);
  }
  CHECK(std::abs(c.zero_l.amp.dot(c.one_l.amp)) < 1e-12);

  // Norm of the unnormalized four-leg superposition vs the analytic
  // N_m = 8 e^{-a^2} (cosh a^2 + (-1)^m cos a^2).
  const double a = 2.3447;
  const double a2 = a * a;
  Vec raw = Vec::Zero(64);
  {
    auto col = [&](cxd al) {
      Vec v(64);
      v(0) = std::exp(-0.5 * std::norm(al));
      for (int m = 1; m < 64; ++m) v(m) = v(m - 1) * al / std::sqrt(double(m));
      return v;
    };
    raw = col({a, 0}) + col({-a, 0}) + col({0, a}) + col({0, -a});
  }
  double n0 = 8.0 * std::exp(-a2) * (std::cosh(a2) + std::cos(a2));
  CHECK(raw.squaredNorm() == doctest::Approx(n0).epsilon(1e-10));

  // Sweet-spot condition: tan(a^2) = -tanh(a^2) within ~1e-3 at the shipped
  // default (the positive-sign variant does not hold there).
  CHECK(std::abs(std::tan(a2) + std::tanh(a2)) < 1e-3);
  CHECK(std::abs(std::tan(a2) - std::tanh(a2)) > 1.0);

  FockSpace tiny{16, 1.0, 0};
  CHECK_THROWS(cat_code(tiny));
}

TEST_CASE("GKP code: overlap bound, grid convergence, determinism") {
  FockSpace s{32, 1.0, 16};
  auto g = gkp_code(s);  // sigma = 0.35, n_range = 8
  double overlap = std::abs(g.zero_l.amp.dot(g.one_l.amp));
  CHECK(overlap <= 1.5 * std::exp(-kPi / (4.0 * 0.35 * 0.35)));
  CHECK(overlap > 0.0);  // codewords only approximately orthogonal

  // Comb-extent convergence. n_range = 3 is NOT converged at sigma = 0.35
  // (the n2-direction envelope decays only as e^{-0.19 n2^2}; measured
  // change 3->5 is ~1.6e-2); from n_range = 8 the added comb points lie
  // entirely above the cutoff and the codewords are converged to below
  // 1e-8 (hence the shipped default of 8).
  auto g3 = gkp_code(s, 0.35, 3);
  CHECK((g.zero_l.amp - g3.zero_l.amp).cwiseAbs().maxCoeff() > 1e-3);
  auto g10 = gkp_code(s, 0.35, 10);
  CHECK((g.zero_l.amp - g10.zero_l.amp).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((g.one_l.amp - g10.one_l.amp).cwiseAbs().maxCoeff() < 1e-8);

  auto g2 = gkp_code(s, 0.35, 8);
  CHECK((g.zero_l.amp - g2.zero_l.amp).cwiseAbs().maxCoeff() == 0.0);

  // Q^dag Q = I despite the non-orthogonal raw codewords.
  CHECK((g.embedding.q.adjoint() * g.embedding.q - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-10);

  CHECK_THROWS(gkp_code(s, 0.0, 5));
  CHECK_THROWS(gkp_code(s, 0.35, 2));
  FockSpace tiny{10, 1.0, 0};
  CHECK_THROWS(gkp_code(tiny, 0.35, 5));
}

TEST_CASE("codewords are fixed points of the quarter rotation up to phase") {
  FockSpace s{32, 1.0, 16};
  auto rot = [](const QuantumState& psi) {
    Vec v = psi.amp;
    for (int n = 0; n < v.size(); ++n) v(n) *= std::polar(1.0, kPi / 2.0 * n);
    return v;
  };
  for (const auto& code : {binomial_code(s), cat_code(s)}) {
    for (const auto* w : {&code.zero_l, &code.one_l}) {
      Vec r = rot(*w);
      cxd ph = w->amp.dot(r);
      CHECK(std::abs(std::abs(ph) - 1.0) < 1e-10);             // eigenvector up to phase
      CHECK((r - ph * w->amp).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("Knill-Laflamme diagnostics") {
  FockSpace s{32, 1.0, 16};
  auto [a, ad] = fock::ladder_ops(s);
  OperatorMatrix iden{s, Mat::Identity(32, 32), true};

  // Binomial with {I, a}: both codewords have mean photon number 3, so the
  // diagonal condition holds exactly.
  auto bin = binomial_code(s);
  auto rb = kl_check(bin, {iden, a});
  CHECK(rb.max_diag_dev < 1e-13);
  CHECK(rb.max_offdiag < 1e-13);

  // Cat at the sweet spot: diagonal deviation < 1e-3.
  auto cat = cat_code(s);
  auto rc = kl_check(cat, {iden, a});
  CHECK(rc.max_diag_dev < 1e-3);
  CHECK(rc.max_offdiag < 1e-10);  // mod-4 support separates the sectors

  // Non-code pair (|0>, |1>) with {a}: off-diagonal 0, diagonal deviation 1.
  auto r0 = kl_check(fock::fock_state(s, 0), fock::fock_state(s, 1), {a});
  CHECK(r0.max_offdiag < 1e-14);
  CHECK(r0.max_diag_dev == doctest::Approx(1.0));
}

TEST_CASE("code construction is deterministic") {
  FockSpace s{32, 1.0, 16};
  auto a = cat_code(s), b = cat_code(s);
  CHECK((a.zero_l.amp - b.zero_l.amp).cwiseAbs().maxCoeff() == 0.0);
  auto ga = gkp_code(s), gb = gkp_code(s);
  CHECK((ga.one_l.amp - gb.one_l.amp).cwiseAbs().maxCoeff() == 0.0);
}
