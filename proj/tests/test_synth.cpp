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

#include "floq/synth.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "floq/fock.hpp"

using namespace floq;
using namespace floq::synth;

namespace {

QuantumState random_state(const FockSpace& space, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Vec v(space.dim);
  for (int i = 0; i < space.dim; ++i) v(i) = cxd(nd(rng), nd(rng));
  return fock::normalized_state(space, std::move(v));
}

Mat haar_unitary(int dim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Mat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = cxd(nd(rng), nd(rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

}  // namespace

TEST_CASE("householder: collinear target gives the identity (up to phase op)") {
  FockSpace s{8, 1.0, 0};
  auto psi = random_state(s, 1);
  auto u = householder_unitary(psi, psi);
  CHECK((u.mat - Mat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);

  // Pure global phase: one-dimensional phase operation.
  QuantumState psi_ph{s, std::polar(1.0, 0.7) * psi.amp};
  auto u2 = householder_unitary(psi, psi_ph);
  CHECK((u2.mat * psi.amp - psi_ph.amp).cwiseAbs().maxCoeff() < 1e-12);
  require_unitary(u2, 1e-12);
}

TEST_CASE("householder: orthogonal pair maps |0> to |1>, fixes the rest up to phase") {
  FockSpace s{8, 1.0, 0};
  auto v0 = fock::fock_state(s, 0);
  auto v1 = fock::fock_state(s, 1);
  auto u = householder_unitary(v0, v1);
  CHECK((u.mat * v0.amp - v1.amp).cwiseAbs().maxCoeff() < 1e-14);
  require_unitary(u, 1e-12);
  for (int n = 2; n < 8; ++n) {
    Vec en = Vec::Zero(8);
    en(n) = 1.0;
    Vec out = u.mat * en;
    // Identity up to a global phase on the complement.
    CHECK(std::abs(std::abs(out(n)) - 1.0) < 1e-12);
  }
}

TEST_CASE("householder: property test over random pairs at dim=32") {
  FockSpace s{32, 1.0, 0};
  std::mt19937 seeds(2024);
  for (int it = 0; it < 100; ++it) {
    auto a = random_state(s, seeds());
    auto b = random_state(s, seeds());
    auto u = householder_unitary(a, b);
    CHECK((u.mat * a.amp - b.amp).norm() < 1e-12);
    CHECK((u.mat.adjoint() * u.mat - Mat::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("householder: complement is fixed up to one global phase") {
  FockSpace s{16, 1.0, 0};
  auto a = random_state(s, 7);
  auto b = random_state(s, 8);
  auto u = householder_unitary(a, b);
  // Build vectors orthogonal to span{a, b} and check they acquire a common phase.
  Mat basis(16, 2);
  basis.col(0) = a.amp;
  basis.col(1) = b.amp;
  Eigen::HouseholderQR<Mat> qr(basis);
  Mat q = qr.householderQ();
  cxd phase(0, 0);
  for (int j = 2; j < 16; ++j) {
    Vec v = q.col(j);
    Vec w = u.mat * v;
    cxd ph = v.dot(w);  // <v|U|v>, modulus ~1 if v is an eigenvector
    CHECK(std::abs(std::abs(ph) - 1.0) < 1e-10);
    if (j == 2) {
      phase = ph;
    } else {
      CHECK(std::abs(ph - phase) < 1e-10);
    }
  }
}

TEST_CASE("householder input validation") {
  FockSpace s{8, 1.0, 0};
  auto good = random_state(s, 3);
  QuantumState bad{s, 0.5 * good.amp};
  CHECK_THROWS(householder_unitary(good, bad));
  CHECK_THROWS(householder_unitary(bad, good));
}

TEST_CASE("principal Hamiltonian: trivial cases") {
  FockSpace s{4, 1.0, 0};
  TargetUnitary iden{s, Mat::Identity(4, 4)};
  auto r = principal_hamiltonian(iden);
  CHECK(r.h.mat.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(!r.near_branch_cut);

  TargetUnitary ph{s, std::polar(1.0, -kPi / 2.0) * Mat::Identity(4, 4)};
  auto r2 = principal_hamiltonian(ph, 2.0);  // T = 2
  Mat expect = (kPi / 2.0) * (s.lambda / 2.0) * Mat::Identity(4, 4);
  CHECK((r2.h.mat - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("principal Hamiltonian: Haar round trip and idempotence") {
  FockSpace s{8, 1.0, 0};
  std::mt19937 seeds(99);
  for (int it = 0; it < 100; ++it) {
    TargetUnitary u{s, haar_unitary(8, seeds())};
    auto r = principal_hamiltonian(u);
    // exp(-i H T / lambda) via eigendecomposition of Hermitian H.
    Eigen::SelfAdjointEigenSolver<Mat> es(r.h.mat);
    Vec ph(8);
    for (int j = 0; j < 8; ++j) ph(j) = std::polar(1.0, -es.eigenvalues()(j) / s.lambda);
    Mat back = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    CHECK((back - u.mat).cwiseAbs().maxCoeff() < 1e-9);
    // Eigenphases restricted to the principal interval.
    CHECK(es.eigenvalues().maxCoeff() <= kPi * s.lambda + 1e-12);
    CHECK(es.eigenvalues().minCoeff() > -kPi * s.lambda - 1e-12);

    auto r2 = principal_hamiltonian({s, back});
    if (!r.near_branch_cut) {
      CHECK((r2.h.mat - r.h.mat).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("principal Hamiltonian flags eigenvalues at the branch cut") {
  FockSpace s{4, 1.0, 0};
  Mat u = Mat::Identity(4, 4);
  u(2, 2) = -1.0;
  auto r = principal_hamiltonian({s, u});
  CHECK(r.near_branch_cut);
  // The pi phase is kept on the principal branch.
  Eigen::SelfAdjointEigenSolver<Mat> es(r.h.mat);
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("logical embedding: orthonormalization and gate embedding") {
  FockSpace s{16, 1.0, 0};
  // Deliberately non-orthogonal codeword pair.
  Vec z = Vec::Zero(16), o = Vec::Zero(16);
  z(0) = 1.0;
  o(0) = 0.3;
  o(2) = std::sqrt(1.0 - 0.09);
  auto zero = fock::make_state(s, z);
  auto one = fock::make_state(s, o);
  auto emb = make_embedding(zero, one);
  CHECK((emb.q.adjoint() * emb.q - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((emb.p * emb.p - emb.p).cwiseAbs().maxCoeff() < 1e-9);

  auto uphys = embed_logical_gate(s, emb, Eigen::Matrix2cd::Identity());
  CHECK((uphys.mat - Mat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);

  auto h = hadamard_su2();
  auto uh = embed_logical_gate(s, emb, h);
  require_unitary(uh, 1e-10);
  Eigen::Matrix2cd restr = emb.q.adjoint() * uh.mat * emb.q;
  CHECK((restr - h).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("logical embedding rejects degenerate codewords") {
  FockSpace s{8, 1.0, 0};
  auto psi = random_state(s, 12);
  QuantumState almost{s, psi.amp};
  CHECK_THROWS(make_embedding(psi, almost));
}

TEST_CASE("gate fidelity: exact values and invariances") {
  auto h = hadamard_su2();
  CHECK(gate_fidelity(h, h) == doctest::Approx(1.0));
  // Trace-orthogonal effective gate: F = 1/3.
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  CHECK(gate_fidelity(x, z) == doctest::Approx(1.0 / 3.0));
  // Global phase invariance.
  CHECK(gate_fidelity(h, std::polar(1.0, 1.23) * h) == doctest::Approx(1.0));
  // Simultaneous basis change.
  Eigen::Matrix2cd v = random_su2(5);
  Eigen::Matrix2cd g1 = random_su2(6), g2 = random_su2(7);
  double f1 = gate_fidelity(g1, g2);
  double f2 = gate_fidelity(v * g1 * v.adjoint(), v * g2 * v.adjoint());
  CHECK(f1 == doctest::Approx(f2).epsilon(1e-12));
}

TEST_CASE("named SU(2) gates are special-unitary with off-cut eigenphases") {
  for (auto g : {hadamard_su2(), phase_su2(), t_su2(), random_su2(321)}) {
    CHECK((g.adjoint() * g - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(g.determinant() - cxd(1, 0)) < 1e-14);
  }
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(hadamard_su2());
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(std::abs(std::arg(es.eigenvalues()(i))) - kPi / 2.0) < 1e-12);
  }
}
