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

#include "floq/qlg.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "floq/fock.hpp"

namespace floq::qlg {

GateSequence compile(const FockSpace& space, const ncft::DrivePulse& pulse, double T) {
  space.validate();
  if (space.lambda != pulse.lambda) {
    throw std::invalid_argument("compile: pulse and space disagree on lambda");
  }
  if (!(T > 0)) throw std::invalid_argument("compile: T must be > 0");
  const auto& g = pulse.grid;
  if (pulse.envelope.size() != g.N_t) throw std::invalid_argument("compile: envelope length");

  GateSequence seq;
  seq.space = space;
  seq.meta = {g.N_t, g.N_k, g.k_f, pulse.beta0, T};
  seq.gates.reserve(size_t(g.N_t) * g.N_k);
  const double scale = (T / g.N_t) * (g.k_f / g.N_k);
  for (int ti = 0; ti < g.N_t; ++ti) {
    for (int ki = 0; ki < g.N_k; ++ki) {
      seq.gates.push_back({pulse.envelope(ti) * pulse.amplitude(ki, ti) * scale,
                           pulse.phase(ki, ti), g.k[ki]});
    }
  }
  return seq;
}

OperatorMatrix cosine_potential(const FockSpace& space, double k, double gamma) {
  if (!(k > 0)) throw std::invalid_argument("cosine_potential: k must be > 0");
  Mat pw = fock::plane_wave(space, k, 0.0).mat;
  cxd ph = std::polar(1.0, gamma);
  Mat c = 0.5 * (ph * pw + (ph * pw).adjoint());
  return {space, std::move(c), true};
}

namespace {

GateCache::Eigensystem decompose_cosine(const FockSpace& space, double gamma, double k) {
  Mat c = cosine_potential(space, k, gamma).mat;
  Eigen::SelfAdjointEigenSolver<Mat> es(c);
  if (es.info() != Eigen::Success) throw std::runtime_error("cosine eigendecomposition failed");
  return {es.eigenvectors(), es.eigenvalues()};
}

// cols <- V diag(exp(-i theta w / lambda)) V^dag cols
void apply_gate(const GateCache::Eigensystem& e, double theta, double lambda, Mat& cols) {
  Mat tmp = e.v.adjoint() * cols;
  const double s = theta / lambda;
  for (int j = 0; j < e.w.size(); ++j) tmp.row(j) *= std::polar(1.0, -s * e.w(j));
  cols.noalias() = e.v * tmp;
}

// Gate matrix through the same arithmetic as apply_gate, so memoized and
// fresh constructions agree bit for bit.
Mat gate_matrix(const GateCache::Eigensystem& e, double theta, double lambda) {
  Mat m = Mat::Identity(e.w.size(), e.w.size());
  apply_gate(e, theta, lambda, m);
  return m;
}

std::pair<std::uint64_t, std::uint64_t> pair_key(double gamma, double k) {
  return {std::bit_cast<std::uint64_t>(gamma), std::bit_cast<std::uint64_t>(k)};
}

}  // namespace

OperatorMatrix elementary_gate(const FockSpace& space, double theta, double gamma, double k) {
  auto e = decompose_cosine(space, gamma, k);
  return {space, gate_matrix(e, theta, space.lambda), false};
}

GateCache::GateCache(const FockSpace& space, std::size_t capacity)
    : space_(space), capacity_(capacity) {
  space_.validate();
}

const GateCache::Eigensystem& GateCache::get(double gamma, double k) {
  const auto key = pair_key(gamma, k);
  auto it = map_.find(key);
  if (it != map_.end()) return it->second;
  if (map_.size() >= capacity_) {
    scratch_ = decompose_cosine(space_, gamma, k);
    return scratch_;
  }
  return map_.emplace(key, decompose_cosine(space_, gamma, k)).first->second;
}

namespace {

Vec slice_rotation(const FockSpace& space, int n_t) {
  // Full-turn rotation (N_t = 1) is the identity on the integer spectrum of
  // the number operator; keep it exact rather than polar(1, -2*pi*n).
  if (n_t == 1) return Vec::Ones(space.dim);
  const double dtau = 2.0 * kPi / n_t;
  Vec r(space.dim);
  for (int n = 0; n < space.dim; ++n) r(n) = std::polar(1.0, -n * dtau);
  return r;
}

void check_sequence(const GateSequence& seq) {
  if (seq.gates.size() != size_t(seq.meta.N_t) * seq.meta.N_k) {
    throw std::invalid_argument("sequence: gate count does not match N_t * N_k");
  }
}

Mat fold_sequence(const GateSequence& seq, Mat cols, GateCache* cache) {
  check_sequence(seq);
  if (seq.gates.empty()) return cols;
  GateCache local(seq.space, size_t(seq.meta.N_t) * seq.meta.N_k + 1);
  GateCache* c = cache ? cache : &local;
  if (!compatible(c->space(), seq.space)) {
    throw std::invalid_argument("apply_sequence: cache bound to a different space");
  }
  const Vec rot = slice_rotation(seq.space, seq.meta.N_t);
  size_t idx = 0;
  for (int m = 0; m < seq.meta.N_t; ++m) {
    cols.array().colwise() *= rot.array();
    for (int n = 0; n < seq.meta.N_k; ++n, ++idx) {
      const GateParams& gp = seq.gates[idx];
      if (gp.theta == 0.0) continue;
      apply_gate(c->get(gp.gamma, gp.k), gp.theta, seq.space.lambda, cols);
    }
  }
  return cols;
}

}  // namespace

QuantumState apply_sequence(const GateSequence& seq, const QuantumState& psi0,
                            GateCache* cache) {
  require_compatible(seq.space, psi0.space, "apply_sequence");
  Mat cols = psi0.amp;
  cols = fold_sequence(seq, std::move(cols), cache);
  Vec out = cols.col(0);
  const double drift = std::abs(out.norm() - 1.0);
  const double tol = 1e-8 * std::max<double>(1.0, double(seq.gates.size()) / 1000.0);
  if (drift > tol) {
    throw std::runtime_error("apply_sequence: norm drift " + std::to_string(drift) +
                             " exceeds tolerance (truncation leak)");
  }
  return {psi0.space, std::move(out)};
}

synth::TargetUnitary sequence_unitary(const GateSequence& seq, GateCache* cache) {
  Mat u = Mat::Identity(seq.space.dim, seq.space.dim);
  u = fold_sequence(seq, std::move(u), cache);
  const double drift = (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  const double tol = 1e-8 * std::max<double>(1.0, double(seq.gates.size()) / 1000.0);
  if (drift > tol) {
    throw std::runtime_error("sequence_unitary: unitarity drift exceeds tolerance");
  }
  return {seq.space, std::move(u)};
}

OperatorMatrix slice_hamiltonian(const GateSequence& seq, int m) {
  check_sequence(seq);
  if (m < 0 || m >= seq.meta.N_t) throw std::invalid_argument("slice_hamiltonian: slice index");
  const double dtau = 2.0 * kPi / seq.meta.N_t;
  const double tau_m = (m + 1) * dtau;
  Mat h = Mat::Zero(seq.space.dim, seq.space.dim);
  for (int n = 0; n < seq.meta.N_k; ++n) {
    const GateParams& gp = seq.gates[size_t(m) * seq.meta.N_k + n];
    if (gp.theta == 0.0) continue;
    h += (gp.theta / dtau) * cosine_potential(seq.space, gp.k, gp.gamma).mat;
  }
  // Rotate into the frame direction of this slice: (j,l) picks up e^{i(j-l)tau_m}.
  for (int j = 0; j < seq.space.dim; ++j) {
    for (int l = 0; l < seq.space.dim; ++l) {
      h(j, l) *= std::polar(1.0, (j - l) * tau_m);
    }
  }
  return {seq.space, std::move(h), true};
}

SequenceEngine::SequenceEngine(const FockSpace& space, const ncft::DrivePulse& pulse, double T)
    : space_(space),
      meta_{pulse.grid.N_t, pulse.grid.N_k, pulse.grid.k_f, pulse.beta0, T},
      cache_(space, std::max<std::size_t>(10000, size_t(pulse.grid.N_t) * pulse.grid.N_k + 1)) {
  space_.validate();
  if (space_.lambda != pulse.lambda) {
    throw std::invalid_argument("SequenceEngine: pulse and space disagree on lambda");
  }
  const double scale = (T / meta_.N_t) * (meta_.k_f / meta_.N_k);
  theta_base_ = pulse.amplitude * scale;
  gamma_ = pulse.phase;
  kgrid_ = pulse.grid.k;
  rot_ = slice_rotation(space_, meta_.N_t);
  eig_.resize(size_t(meta_.N_k) * meta_.N_t, nullptr);
  for (int ti = 0; ti < meta_.N_t; ++ti) {
    for (int ki = 0; ki < meta_.N_k; ++ki) {
      if (theta_base_(ki, ti) == 0.0) continue;  // identity gate, never applied
      eig_[size_t(ti) * meta_.N_k + ki] = &cache_.get(gamma_(ki, ti), kgrid_[ki]);
    }
  }
}

void SequenceEngine::apply_slice(int m, double beta_m, Mat& cols) const {
  cols.array().colwise() *= rot_.array();
  for (int ki = 0; ki < meta_.N_k; ++ki) {
    const double theta = beta_m * theta_base_(ki, m);
    if (theta == 0.0) continue;
    apply_gate(*eig_[size_t(m) * meta_.N_k + ki], theta, space_.lambda, cols);
  }
}

void SequenceEngine::apply_slice_adjoint(int m, double beta_m, Mat& cols) const {
  for (int ki = meta_.N_k - 1; ki >= 0; --ki) {
    const double theta = beta_m * theta_base_(ki, m);
    if (theta == 0.0) continue;
    apply_gate(*eig_[size_t(m) * meta_.N_k + ki], -theta, space_.lambda, cols);
  }
  cols.array().colwise() *= rot_.array().conjugate();
}

Mat SequenceEngine::apply(const RVec& beta, Mat cols) const {
  if (beta.size() != meta_.N_t) throw std::invalid_argument("SequenceEngine: beta length");
  for (int m = 0; m < meta_.N_t; ++m) apply_slice(m, beta(m), cols);
  return cols;
}

Vec SequenceEngine::apply_vec(const RVec& beta, Vec psi) const {
  Mat cols = std::move(psi);
  cols = apply(beta, std::move(cols));
  return cols.col(0);
}

GateSequence SequenceEngine::to_sequence(const RVec& beta) const {
  if (beta.size() != meta_.N_t) throw std::invalid_argument("SequenceEngine: beta length");
  GateSequence seq;
  seq.space = space_;
  seq.meta = meta_;
  seq.gates.reserve(size_t(meta_.N_t) * meta_.N_k);
  for (int ti = 0; ti < meta_.N_t; ++ti) {
    for (int ki = 0; ki < meta_.N_k; ++ki) {
      seq.gates.push_back({beta(ti) * theta_base_(ki, ti), gamma_(ki, ti), kgrid_[ki]});
    }
  }
  return seq;
}

}  // namespace floq::qlg
