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

#include "floq/fock.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"

using namespace floq;
using namespace floq::fock;

namespace {

QuantumState random_state(const FockSpace& space, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Vec v(space.dim);
  for (int i = 0; i < space.dim; ++i) v(i) = cxd(nd(rng), nd(rng));
  return normalized_state(space, std::move(v));
}

}  // namespace

TEST_CASE("ladder operators: defining matrix elements") {
  FockSpace s2{2, 1.0, 0};
  auto [a, ad] = ladder_ops(s2);
  CHECK(a.mat(0, 1) == cxd(1.0, 0.0));
  CHECK(a.mat(0, 0) == cxd(0.0, 0.0));
  CHECK(a.mat(1, 0) == cxd(0.0, 0.0));
  CHECK(a.mat(1, 1) == cxd(0.0, 0.0));

  FockSpace s3{3, 1.0, 0};
  auto [a3, ad3] = ladder_ops(s3);
  CHECK(ad3.mat(2, 1).real() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("[a, a^dag] is the identity except the truncation corner") {
  FockSpace s{16, 1.0, 0};
  auto [a, ad] = ladder_ops(s);
  Mat comm = a.mat * ad.mat - ad.mat * a.mat;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      if (i == 15 && j == 15) {
        CHECK(comm(i, j).real() == doctest::Approx(1.0 - 16.0));  // top row of a a^dag lost
      } else {
        cxd expect = (i == j) ? cxd(1, 0) : cxd(0, 0);
        CHECK(std::abs(comm(i, j) - expect) < 1e-13);
      }
    }
  }
}

TEST_CASE("quadratures: dim=2 matrix, commutator, lambda scaling") {
  FockSpace s{2, 1.0, 0};
  auto [x, p] = quadratures(s);
  CHECK(std::abs(x.mat(0, 1) - cxd(1.0 / std::sqrt(2.0), 0)) < 1e-15);
  CHECK(std::abs(x.mat(1, 0) - cxd(1.0 / std::sqrt(2.0), 0)) < 1e-15);
  CHECK(std::abs(x.mat(0, 0)) == 0.0);

  FockSpace s32{32, 1.0, 0};
  auto [x2, p2] = quadratures(s32);
  Mat comm = x2.mat * p2.mat - p2.mat * x2.mat;
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      if (i == 31 && j == 31) continue;  // truncation corner
      cxd expect = (i == j) ? cxd(0, s32.lambda) : cxd(0, 0);
      CHECK(std::abs(comm(i, j) - expect) < 1e-12);
    }
  }

  FockSpace sl{2, 2.0, 0};
  auto [xl, pl] = quadratures(sl);
  CHECK(std::abs(xl.mat(0, 1) / x.mat(0, 1) - std::sqrt(2.0)) < 1e-14);

  // Hermiticity exact by construction.
  CHECK((x2.mat - x2.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((p2.mat - p2.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("displacement: vacuum overlap, identity, inverse pair") {
  FockSpace s{32, 1.0, 16};
  for (cxd alpha : {cxd(0.5, 0), cxd(1.0, -0.7), cxd(-0.3, 1.2)}) {
    Mat d = displacement(s, alpha).mat;
    CHECK(std::abs(d(0, 0) - std::exp(-0.5 * std::norm(alpha))) < 1e-13);
  }
  Mat d0 = displacement(s, cxd(0, 0)).mat;
  CHECK((d0 - Mat::Identity(32, 32)).cwiseAbs().maxCoeff() == 0.0);

  // D(a) D(-a) composed in the padded space, truncated afterwards: identity
  // on the block whose displaced support stays below the padded cutoff.
  const int pd = s.padded_dim();
  for (cxd alpha : {cxd(2.0, 0.0), cxd(1.1, -1.3)}) {
    Mat dp = displacement_matrix(pd, alpha);
    Mat dm = displacement_matrix(pd, -alpha);
    Mat prod = (dp * dm).topLeftCorner(s.dim / 2, s.dim / 2);
    CHECK((prod - Mat::Identity(s.dim / 2, s.dim / 2)).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("displacement columns match the factored vector application") {
  FockSpace s{24, 1.0, 0};
  cxd alpha(0.8, -0.45);
  Mat d = displacement(s, alpha).mat;
  Vec e3 = Vec::Zero(24);
  e3(3) = 1.0;
  Vec v = displace_vector(alpha, e3);
  CHECK((v - d.col(3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("plane wave: identity at k=0, displacement correspondence, vacuum Gaussian") {
  FockSpace s{32, 1.0, 16};
  Mat pw0 = plane_wave(s, 0.0, 0.0).mat;
  CHECK((pw0 - Mat::Identity(32, 32)).cwiseAbs().maxCoeff() == 0.0);

  double k = 1.3;
  Mat pw = plane_wave(s, k, 0.0).mat;
  Mat d = displacement(s, cxd(0, 1) * k * std::sqrt(s.lambda / 2.0)).mat;
  CHECK((pw - d).cwiseAbs().maxCoeff() == 0.0);

  // Independent check of exp(i k x): exponentiate the truncated x in a larger
  // space and compare on the inner block where truncation is irrelevant.
  {
    FockSpace big{48, 1.0, 0};
    auto [x, p] = quadratures(big);
    Eigen::SelfAdjointEigenSolver<Mat> es(x.mat);
    Vec ph(48);
    for (int j = 0; j < 48; ++j) ph(j) = std::polar(1.0, k * es.eigenvalues()(j));
    Mat expx = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    Mat pwb = plane_wave(big, k, 0.0).mat;
    CHECK((expx - pwb).topLeftCorner(16, 16).cwiseAbs().maxCoeff() < 1e-10);
  }

  // <0|e^{ikx}|0> = e^{-lambda k^2/4}, cross-checked by quadrature over the
  // vacuum wavefunction |psi0(x)|^2 = (pi lambda)^{-1/2} e^{-x^2/lambda}.
  for (double lam : {1.0, 0.6}) {
    FockSpace sl{32, lam, 16};
    for (double kk : {0.4, 1.0, 2.2}) {
      cxd got = plane_wave(sl, kk, 0.0).mat(0, 0);
      cxd quad(0, 0);
      const int nq = 4001;
      const double L = 8.0 * std::sqrt(lam);
      const double h = 2 * L / (nq - 1);
      for (int i = 0; i < nq; ++i) {
        double xv = -L + i * h;
        double wgt = (i == 0 || i == nq - 1) ? 0.5 : 1.0;
        quad += wgt * h * std::exp(-xv * xv / lam) / std::sqrt(kPi * lam) *
                std::polar(1.0, kk * xv);
      }
      CHECK(std::abs(got - quad) < 1e-9);
      CHECK(std::abs(got - std::exp(-lam * kk * kk / 4.0)) < 1e-12);
    }
  }
}

TEST_CASE("unitarity of displacement / plane-wave truncations on the safe block") {
  // Unitarity holds where the displaced support stays below the padded
  // cutoff: the photon distribution of D(alpha)|n> has width
  // |alpha| sqrt(2n+1), so the defect grows towards the cutoff and no fixed
  // tolerance survives on the full block. U^dag U composed in the padded
  // space is identity on the lower half-block to well under 1e-6 for
  // |alpha| <= 2.
  FockSpace s{32, 1.0, 16};
  const int pd = s.padded_dim();
  for (cxd alpha : {cxd(2, 0), cxd(0.9, 0.9), cxd(0, -1.5)}) {
    Mat d = displacement_matrix(pd, alpha);
    Mat g = (d.adjoint() * d - Mat::Identity(pd, pd)).topLeftCorner(16, 16);
    CHECK(g.cwiseAbs().maxCoeff() < 1e-6);
  }
  FockSpace sp{pd, 1.0, 0};
  Mat pw = plane_wave(sp, 2.0, 1.0).mat;
  Mat g = (pw.adjoint() * pw - Mat::Identity(pd, pd)).topLeftCorner(16, 16);
  CHECK(g.cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("truncation consistency: pad vs 2*pad") {
  // Closed-form single operators are cutoff independent; compositions built
  // in the padded space must agree once the padding is already sufficient.
  FockSpace s{32, 1.0, 16};
  cxd alpha(1.5, -0.8);
  Mat a1 = displacement_matrix(s.dim + 16, alpha).topLeftCorner(32, 32);
  Mat a2 = displacement_matrix(s.dim + 32, alpha).topLeftCorner(32, 32);
  CHECK((a1 - a2).cwiseAbs().maxCoeff() == 0.0);

  Mat p1 = (displacement_matrix(48, alpha) * displacement_matrix(48, -alpha))
               .topLeftCorner(16, 16);
  Mat p2 = (displacement_matrix(64, alpha) * displacement_matrix(64, -alpha))
               .topLeftCorner(16, 16);
  CHECK((p1 - p2).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("state fidelity: trivial values and coherent overlap") {
  FockSpace s{32, 1.0, 16};
  auto v0 = vacuum_state(s);
  auto f1 = fock_state(s, 1);
  CHECK(fidelity_state(v0, v0) == doctest::Approx(1.0));
  CHECK(fidelity_state(v0, f1) == doctest::Approx(0.0));

  Vec c = displacement(s, cxd(1, 0)).mat.col(0);
  auto coh = make_state(s, c);  // |alpha=1> truncated; norm ~ 1 at dim=32
  CHECK(fidelity_state(v0, coh) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));

  FockSpace other{16, 1.0, 0};
  CHECK_THROWS(fidelity_state(v0, vacuum_state(other)));
}

TEST_CASE("state construction guards") {
  FockSpace s{8, 1.0, 0};
  Vec v = Vec::Zero(8);
  v(0) = 0.7;
  CHECK_THROWS(make_state(s, v));
  auto st = normalized_state(s, v);
  CHECK(std::abs(st.amp.norm() - 1.0) < 1e-15);
  CHECK_THROWS(normalized_state(s, Vec::Zero(8)));
}

TEST_CASE("Wigner function: vacuum peak, Fock-state negativity, normalization") {
  FockSpace s{8, 1.0, 8};
  WignerOptions opt;
  opt.nx = opt.np = 101;
  auto g0 = wigner(vacuum_state(s), opt);
  int ic = 50;  // center of the odd grid
  CHECK(g0.x(ic) == doctest::Approx(0.0));
  CHECK(g0.w(ic, ic) == doctest::Approx(1.0 / kPi).epsilon(1e-6));

  auto g1 = wigner(fock_state(s, 1), opt);
  CHECK(g1.w(ic, ic) < 0.0);

  // Integral over the grid ~ 1 for a random state whose support fits the
  // window (dim 8: outermost ring radius ~ sqrt(2*7.5) ~ 3.9 < 5).
  auto gr = wigner(random_state(s, 42), opt);
  double dx = gr.x(1) - gr.x(0);
  double dp = gr.p(1) - gr.p(0);
  double integral = gr.w.sum() * dx * dp;
  CHECK(integral == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("Wigner of a mixed state matches the pure-state decomposition") {
  FockSpace s{6, 1.0, 8};
  WignerOptions opt;
  opt.nx = opt.np = 41;
  auto psi_a = fock_state(s, 0);
  auto psi_b = fock_state(s, 2);
  DensityState mix{s, 0.5 * pure_density(psi_a).rho + 0.5 * pure_density(psi_b).rho};
  auto gm = wigner(mix, opt);
  auto ga = wigner(psi_a, opt);
  auto gb = wigner(psi_b, opt);
  CHECK((gm.w - 0.5 * ga.w - 0.5 * gb.w).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("density validation catches broken inputs") {
  FockSpace s{4, 1.0, 0};
  auto rho = pure_density(vacuum_state(s));
  CHECK_NOTHROW(validate_density(rho));
  DensityState bad{s, 2.0 * rho.rho};
  CHECK_THROWS(validate_density(bad));
}

TEST_CASE("mean photon number") {
  FockSpace s{8, 1.0, 0};
  CHECK(mean_photon(fock_state(s, 3)) == doctest::Approx(3.0));
  CHECK(mean_photon(pure_density(fock_state(s, 3))) == doctest::Approx(3.0));
}
