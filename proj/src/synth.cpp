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

#include <Eigen/Eigenvalues>

namespace floq::synth {

void require_unitary(const TargetUnitary& u, double tol) {
  Mat d = u.mat.adjoint() * u.mat - Mat::Identity(u.mat.rows(), u.mat.cols());
  if (d.cwiseAbs().maxCoeff() > tol) throw std::runtime_error("require_unitary: not unitary");
}

TargetUnitary householder_unitary(const QuantumState& psi0, const QuantumState& psi_tar) {
  require_compatible(psi0.space, psi_tar.space, "householder_unitary");
  if (std::abs(psi0.amp.norm() - 1.0) > 1e-10 || std::abs(psi_tar.amp.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("householder_unitary: states must be normalized");
  }
  const int dim = psi0.space.dim;
  const cxd r = psi_tar.amp.dot(psi0.amp);  // <psi_tar|psi0>
  const double ar = std::abs(r);

  if (1.0 - ar < 1e-12) {
    // Collinear: a rank-one phase rotation on psi0.
    const cxd eith = std::conj(r) / ar;  // psi_tar = e^{i theta} psi0
    Mat u = Mat::Identity(dim, dim);
    u += (eith - 1.0) * (psi0.amp * psi0.amp.adjoint());
    return {psi0.space, std::move(u)};
  }

  const cxd eiphi = (ar < 1e-14) ? cxd(1.0, 0.0) : r / ar;
  Vec v = psi0.amp - eiphi * psi_tar.amp;
  Vec u_vec = v / v.norm();
  Mat refl = Mat::Identity(dim, dim) - 2.0 * (u_vec * u_vec.adjoint());
  Mat phase = Mat::Identity(dim, dim);
  phase += (std::conj(eiphi) - 1.0) * (psi_tar.amp * psi_tar.amp.adjoint());
  return {psi0.space, phase * refl};
}

PrincipalResult principal_hamiltonian(const TargetUnitary& u, double T) {
  if (!(T > 0)) throw std::invalid_argument("principal_hamiltonian: T must be > 0");
  require_unitary(u, 1e-8);
  const int dim = u.space.dim;

  // The Schur form of a normal matrix is (numerically almost) diagonal with
  // orthonormal Q, which keeps the reconstructed generator Hermitian to
  // machine precision; ComplexEigenSolver does not guarantee orthonormal
  // eigenvectors.
  Eigen::ComplexSchur<Mat> schur(u.mat);
  const Mat& q = schur.matrixU();
  Vec eig = schur.matrixT().diagonal();

  RVec theta(dim);
  bool near_cut = false;
  for (int j = 0; j < dim; ++j) {
    double t = -std::arg(eig(j));  // eigenvalue e^{-i theta}
    if (t <= -kPi) t = kPi;        // principal interval (-pi, pi]
    if (std::abs(t) >= kPi - 1e-8) near_cut = true;
    theta(j) = t;
  }
  Mat h = q * theta.asDiagonal().toDenseMatrix().cast<cxd>() * q.adjoint();
  h *= u.space.lambda / T;
  h = 0.5 * (h + h.adjoint()).eval();
  return {OperatorMatrix{u.space, std::move(h), true}, near_cut};
}

LogicalEmbedding make_embedding(const QuantumState& zero_l, const QuantumState& one_l) {
  require_compatible(zero_l.space, one_l.space, "make_embedding");
  const int dim = zero_l.space.dim;
  Mat c(dim, 2);
  c.col(0) = zero_l.amp;
  c.col(1) = one_l.amp;
  Eigen::Matrix2cd g = c.adjoint() * c;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(g);
  if (es.eigenvalues().minCoeff() < 1e-8) {
    throw std::runtime_error("make_embedding: degenerate Gram matrix (codewords nearly parallel)");
  }
  Eigen::Vector2d inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
  Eigen::Matrix2cd g_inv_half =
      es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
  LogicalEmbedding emb;
  emb.q = c * g_inv_half;
  emb.p = emb.q * emb.q.adjoint();
  return emb;
}

TargetUnitary embed_logical_gate(const FockSpace& space, const LogicalEmbedding& emb,
                                 const Eigen::Matrix2cd& ul) {
  if ((ul.adjoint() * ul - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("embed_logical_gate: U_L not unitary");
  }
  Mat u = emb.q * ul * emb.q.adjoint();
  u += Mat::Identity(space.dim, space.dim) - emb.p;
  return {space, std::move(u)};
}

double gate_fidelity(const Eigen::Matrix2cd& g_tar, const Eigen::Matrix2cd& g_eff) {
  const double d = 2.0;
  return (std::norm((g_tar.adjoint() * g_eff).trace()) + d) / (d * (d + 1.0));
}

Eigen::Matrix2cd hadamard_su2() {
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return cxd(0.0, -1.0) * h;  // e^{-i pi/2} H, det = +1, eigenphases +-pi/2
}

Eigen::Matrix2cd phase_su2() {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  s(0, 0) = std::polar(1.0, -kPi / 4.0);
  s(1, 1) = std::polar(1.0, kPi / 4.0);
  return s;
}

Eigen::Matrix2cd t_su2() {
  Eigen::Matrix2cd t = Eigen::Matrix2cd::Zero();
  t(0, 0) = std::polar(1.0, -kPi / 8.0);
  t(1, 1) = std::polar(1.0, kPi / 8.0);
  return t;
}

Eigen::Matrix2cd random_su2(std::uint64_t seed) {
  // Haar on SU(2): uniform unit quaternion.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  double a = nd(rng), b = nd(rng), c = nd(rng), d = nd(rng);
  double n = std::sqrt(a * a + b * b + c * c + d * d);
  a /= n;
  b /= n;
  c /= n;
  d /= n;
  Eigen::Matrix2cd u;
  u << cxd(a, b), cxd(c, d), cxd(-c, d), cxd(a, -b);
  return u;
}

}  // namespace floq::synth
