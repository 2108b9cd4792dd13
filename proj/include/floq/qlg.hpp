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

#ifndef FLOQ_QLG_HPP
#define FLOQ_QLG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "floq/ncft.hpp"
#include "floq/synth.hpp"
#include "floq/types.hpp"

namespace floq::qlg {

struct GateParams {
  double theta = 0.0;
  double gamma = 0.0;  // in (-pi, pi]
  double k = 0.0;      // > 0
};

struct SequenceMeta {
  int N_t = 0;
  int N_k = 0;
  double k_f = 0.0;
  double beta0 = 1.0;
  double T = 1.0;  // evolution duration in units of the driving period
};

/// Ordered gate list, time-major: for each time slice, all wavenumbers in
/// ascending order. gates[i] is applied i-th (chronologically); between
/// consecutive time slices the simulator inserts the exact free harmonic
/// rotation exp(-i n_op * 2pi/N_t) that realizes the stroboscopic
/// rotating-frame evolution (for N_t = 1 this is the identity).
struct GateSequence {
  FockSpace space;
  std::vector<GateParams> gates;
  SequenceMeta meta;
};

/// theta_{m,n} = beta(tau_m) * A(k_n, tau_m) * (T/N_t) * (k_f/N_k),
/// gamma_{m,n} = phi(k_n, tau_m). T is measured in driving periods; the
/// leading-order sequence exponent then equals beta0 * T * H_tar / lambda,
/// so the default T = 1 with beta0 = 1 realizes exp(-i H_tar / lambda).
GateSequence compile(const FockSpace& space, const ncft::DrivePulse& pulse, double T = 1.0);

/// cos(k x + gamma) assembled from the closed-form plane-wave matrix
/// elements (exact for the untruncated operator), then truncated --
/// deliberately not cos() applied to eigenvalues of the truncated x.
OperatorMatrix cosine_potential(const FockSpace& space, double k, double gamma);

/// Elementary QLG exp(-(i/lambda) theta cos(k x + gamma)); exactly unitary
/// because the truncated cosine is Hermitian and exponentiated by
/// eigendecomposition.
OperatorMatrix elementary_gate(const FockSpace& space, double theta, double gamma, double k);

/// Eigendecompositions of cos(k x + gamma) keyed by the (gamma, k) bit
/// patterns. theta enters only through the exponentiated eigenvalues, so one
/// entry serves every envelope rescaling of a gate. Not thread-safe.
class GateCache {
 public:
  struct Eigensystem {
    Mat v;
    RVec w;
  };

  explicit GateCache(const FockSpace& space, std::size_t capacity = 10000);

  /// Returns the cached eigensystem, inserting it if capacity allows. When
  /// the cache is full the result lives in a scratch slot that the next call
  /// overwrites.
  const Eigensystem& get(double gamma, double k);

  const FockSpace& space() const { return space_; }
  std::size_t size() const { return map_.size(); }

 private:
  FockSpace space_;
  std::size_t capacity_;
  // Exact bit patterns as the key: no tolerance aliasing, no hash collisions.
  std::map<std::pair<std::uint64_t, std::uint64_t>, Eigensystem> map_;
  Eigensystem scratch_;
};

/// Left-fold of the sequence over psi0 (with the inter-slice rotations).
/// Throws if the final norm drifts beyond 1e-8 per 1000 gates -- a
/// truncation-leak diagnostic, since every factor is exactly unitary.
QuantumState apply_sequence(const GateSequence& seq, const QuantumState& psi0,
                            GateCache* cache = nullptr);

/// Full product matrix of the sequence.
synth::TargetUnitary sequence_unitary(const GateSequence& seq, GateCache* cache = nullptr);

/// Piecewise Hamiltonian of time slice m (0-based) in the rotating frame:
/// sum_n (theta_{m,n}/dtau) cos(k_n x(tau_m) + gamma_{m,n}) with
/// x(tau) = x cos(tau) + p sin(tau) entering as the elementwise phase
/// conjugation by exp(i n_op tau_m). dtau = 2pi/N_t is the slice duration in
/// dimensionless time.
OperatorMatrix slice_hamiltonian(const GateSequence& seq, int m);

/// A compiled pulse bound to a simulation space with all (gamma, k)
/// eigensystems prewarmed: evaluates the sequence for arbitrary envelopes
/// beta without re-diagonalizing anything. This is what makes envelope
/// optimization tractable.
class SequenceEngine {
 public:
  SequenceEngine(const FockSpace& space, const ncft::DrivePulse& pulse, double T = 1.0);

  int n_slices() const { return meta_.N_t; }
  const FockSpace& space() const { return space_; }
  const SequenceMeta& meta() const { return meta_; }

  /// Applies time slice m (rotation, then the slice's kicks scaled by
  /// beta_m) to the columns of `cols` in place.
  void apply_slice(int m, double beta_m, Mat& cols) const;
  /// Adjoint of apply_slice (inverse kicks in reverse order, then inverse
  /// rotation).
  void apply_slice_adjoint(int m, double beta_m, Mat& cols) const;

  Mat apply(const RVec& beta, Mat cols) const;
  Vec apply_vec(const RVec& beta, Vec psi) const;

  /// Materializes the concrete gate list for an envelope.
  GateSequence to_sequence(const RVec& beta) const;

 private:
  FockSpace space_;
  SequenceMeta meta_;
  RMat theta_base_;  // N_k x N_t, envelope excluded
  RMat gamma_;       // N_k x N_t
  std::vector<double> kgrid_;
  Vec rot_;  // exp(-i n dtau)
  GateCache cache_;
  std::vector<const GateCache::Eigensystem*> eig_;  // per (ki, ti), column-major
};

}  // namespace floq::qlg

#endif  // FLOQ_QLG_HPP
