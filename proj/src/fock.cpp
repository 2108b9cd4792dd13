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

#include <Eigen/Eigenvalues>

#include "floq/special.hpp"

namespace floq::fock {

QuantumState vacuum_state(const FockSpace& space) { return fock_state(space, 0); }

QuantumState fock_state(const FockSpace& space, int n) {
  space.validate();
  if (n < 0 || n >= space.dim) throw std::invalid_argument("fock_state: level out of range");
  Vec v = Vec::Zero(space.dim);
  v(n) = 1.0;
  return {space, std::move(v)};
}

QuantumState make_state(const FockSpace& space, Vec amplitudes) {
  space.validate();
  if (amplitudes.size() != space.dim) throw std::invalid_argument("make_state: length mismatch");
  if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("make_state: amplitudes not normalized");
  }
  return {space, std::move(amplitudes)};
}

QuantumState normalized_state(const FockSpace& space, Vec amplitudes) {
  space.validate();
  if (amplitudes.size() != space.dim) throw std::invalid_argument("normalized_state: length mismatch");
  double n = amplitudes.norm();
  if (n < 1e-14) throw std::invalid_argument("normalized_state: zero vector");
  amplitudes /= n;
  return {space, std::move(amplitudes)};
}

DensityState pure_density(const QuantumState& psi) {
  return {psi.space, psi.amp * psi.amp.adjoint()};
}

void validate_density(const DensityState& rho, double herm_tol, double trace_tol,
                      double eig_floor) {
  const Mat& m = rho.rho;
  if (m.rows() != rho.space.dim || m.cols() != rho.space.dim) {
    throw std::invalid_argument("validate_density: shape mismatch");
  }
  double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > herm_tol) throw std::runtime_error("validate_density: not Hermitian");
  double tr = m.trace().real();
  if (std::abs(tr - 1.0) > trace_tol) throw std::runtime_error("validate_density: trace != 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < eig_floor) {
    throw std::runtime_error("validate_density: negative eigenvalue");
  }
}

std::pair<OperatorMatrix, OperatorMatrix> ladder_ops(const FockSpace& space) {
  space.validate();
  Mat a = Mat::Zero(space.dim, space.dim);
  for (int n = 1; n < space.dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  Mat ad = a.adjoint();
  return {OperatorMatrix{space, std::move(a), false}, OperatorMatrix{space, std::move(ad), false}};
}

std::pair<OperatorMatrix, OperatorMatrix> quadratures(const FockSpace& space) {
  auto [a, ad] = ladder_ops(space);
  double c = std::sqrt(space.lambda / 2.0);
  Mat x = c * (ad.mat + a.mat);
  Mat p = cxd(0.0, 1.0) * c * (ad.mat - a.mat);
  return {OperatorMatrix{space, std::move(x), true}, OperatorMatrix{space, std::move(p), true}};
}

OperatorMatrix number_operator(const FockSpace& space) {
  space.validate();
  Mat n = Mat::Zero(space.dim, space.dim);
  for (int j = 0; j < space.dim; ++j) n(j, j) = double(j);
  return {space, std::move(n), true};
}

Mat displacement_matrix(int dim, cxd alpha) {
  Mat d = Mat::Identity(dim, dim);
  if (alpha == cxd(0.0, 0.0)) return d;
  const double x = std::norm(alpha);  // |alpha|^2
  const double gauss = std::exp(-0.5 * x);
  // Fill diagonal by diagonal: <j+q|D|j> = r_j alpha^q L_j^{(q)}(x) gauss,
  // <j|D|j+q> = r_j (-conj(alpha))^q L_j^{(q)}(x) gauss, r_j = sqrt(j!/(j+q)!).
  cxd apow(1.0, 0.0);
  cxd ampow(1.0, 0.0);
  const cxd am = -std::conj(alpha);
  for (int q = 0; q < dim; ++q) {
    if (q > 0) {
      apow *= alpha;
      ampow *= am;
    }
    auto lag = special::laguerre_row(dim - 1 - q, double(q), x);
    double r = special::sqrt_factorial_ratio(0, q);  // sqrt(0!/q!)
    for (int j = 0; j + q < dim; ++j) {
      if (j > 0) r *= std::sqrt(double(j) / double(j + q));
      double base = r * lag[j] * gauss;
      d(j + q, j) = base * apow;
      d(j, j + q) = base * ampow;
    }
  }
  return d;
}

OperatorMatrix displacement(const FockSpace& space, cxd alpha) {
  space.validate();
  return {space, displacement_matrix(space.dim, alpha), false};
}

OperatorMatrix plane_wave(const FockSpace& space, double kx, double kp) {
  cxd alpha = cxd(0.0, 1.0) * std::sqrt(space.lambda / 2.0) * cxd(kx, kp);
  return displacement(space, alpha);
}

Vec displace_vector(cxd alpha, const Vec& v) {
  const int n = int(v.size());
  if (alpha == cxd(0.0, 0.0)) return v;
  // psi1 = exp(conj(-alpha)* a ... ) careful: D(alpha) = e^{-|a|^2/2} e^{alpha a^dag} e^{-conj(alpha) a}.
  Vec acc = v;
  Vec out = v;
  const cxd clow = -std::conj(alpha);
  for (int j = 1; j < n; ++j) {
    // acc <- clow * (a acc) / j
    for (int i = 0; i + 1 < n; ++i) acc(i) = clow * std::sqrt(double(i + 1)) * acc(i + 1) / double(j);
    acc(n - 1) = 0.0;
    out += acc;
    if (acc.norm() < 1e-18 * out.norm()) break;
  }
  acc = out;
  Vec res = out;
  for (int j = 1; j < n; ++j) {
    // acc <- alpha * (a^dag acc) / j; amplitude raised past the top is dropped.
    for (int i = n - 1; i >= 1; --i) acc(i) = alpha * std::sqrt(double(i)) * acc(i - 1) / double(j);
    acc(0) = 0.0;
    res += acc;
    if (acc.norm() < 1e-18 * res.norm()) break;
  }
  return std::exp(-0.5 * std::norm(alpha)) * res;
}

double fidelity_state(const QuantumState& a, const QuantumState& b) {
  require_compatible(a.space, b.space, "fidelity_state");
  return std::norm(a.amp.dot(b.amp));
}

double mean_photon(const QuantumState& psi) {
  double s = 0.0;
  for (int n = 0; n < psi.amp.size(); ++n) s += n * std::norm(psi.amp(n));
  return s;
}

double mean_photon(const DensityState& rho) {
  double s = 0.0;
  for (int n = 0; n < rho.rho.rows(); ++n) s += n * rho.rho(n, n).real();
  return s;
}

namespace {

// Accumulates weight * W_pure(v) over the grid for one padded vector v.
void accumulate_pure_wigner(const FockSpace& space, const Vec& v_pad, double weight,
                            WignerGrid& g) {
  const double lam = space.lambda;
  const int pd = int(v_pad.size());
  const double norm = weight / (kPi * lam);
  for (int i = 0; i < g.x.size(); ++i) {
    for (int j = 0; j < g.p.size(); ++j) {
      cxd alpha = cxd(g.x(i), g.p(j)) / std::sqrt(2.0 * lam);
      Vec d = displace_vector(-alpha, v_pad);
      double s = 0.0;
      for (int n = 0; n < pd; ++n) s += (n % 2 == 0 ? 1.0 : -1.0) * std::norm(d(n));
      g.w(i, j) += norm * s;
    }
  }
}

WignerGrid empty_grid(const FockSpace& space, const WignerOptions& opt) {
  const double xmax = opt.xmax > 0 ? opt.xmax : 5.0 * std::sqrt(space.lambda);
  const double pmax = opt.pmax > 0 ? opt.pmax : 5.0 * std::sqrt(space.lambda);
  WignerGrid g;
  g.x = RVec::LinSpaced(opt.nx, -xmax, xmax);
  g.p = RVec::LinSpaced(opt.np, -pmax, pmax);
  g.w = RMat::Zero(opt.nx, opt.np);
  return g;
}

// The parity sum needs every Fock level the displaced state reaches at the
// grid corner; the space's composition padding is generally far too small
// for that.
int wigner_padded_dim(const FockSpace& space, const WignerGrid& g) {
  const double lam = space.lambda;
  double amax = std::abs(cxd(g.x.cwiseAbs().maxCoeff(), g.p.cwiseAbs().maxCoeff())) /
                std::sqrt(2.0 * lam);
  double s = (amax + std::sqrt(double(space.dim))) * (amax + std::sqrt(double(space.dim)));
  int need = int(std::ceil(s + 5.0 * std::sqrt(s) + 10.0));
  return std::max(space.padded_dim(), need);
}

}  // namespace

WignerGrid wigner(const QuantumState& psi, const WignerOptions& opt) {
  WignerGrid g = empty_grid(psi.space, opt);
  Vec pad = Vec::Zero(wigner_padded_dim(psi.space, g));
  pad.head(psi.space.dim) = psi.amp;
  accumulate_pure_wigner(psi.space, pad, 1.0, g);
  return g;
}

WignerGrid wigner(const DensityState& rho, const WignerOptions& opt) {
  // Mixed states: spectral decomposition, then the pure-state path per mode.
  WignerGrid g = empty_grid(rho.space, opt);
  const int pd = wigner_padded_dim(rho.space, g);
  Mat rho_pad = Mat::Zero(pd, pd);
  rho_pad.topLeftCorner(rho.space.dim, rho.space.dim) = 0.5 * (rho.rho + rho.rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(rho_pad);
  for (int k = 0; k < pd; ++k) {
    double wk = es.eigenvalues()(k);
    if (wk < 1e-14) continue;
    accumulate_pure_wigner(rho.space, es.eigenvectors().col(k), wk, g);
  }
  return g;
}

}  // namespace floq::fock
