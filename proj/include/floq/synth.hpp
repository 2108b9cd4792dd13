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

#ifndef FLOQ_SYNTH_HPP
#define FLOQ_SYNTH_HPP

#include <cstdint>

#include "floq/types.hpp"

namespace floq::synth {

struct TargetUnitary {
  FockSpace space;
  Mat mat;
};

/// Checks ||U^dag U - I||_max; throws if above tol.
void require_unitary(const TargetUnitary& u, double tol = 1e-10);

/// Closed-form unitary with U|psi0> = |psi_tar>, acting as the identity (up
/// to a phase) on the orthogonal complement of span{psi0, psi_tar}. Built as
/// a Householder reflection combined with a rank-one phase correction; the
/// orthogonal (r = 0) and collinear (|r| = 1) overlaps are special-cased.
/// Throws if either input is not normalized.
TargetUnitary householder_unitary(const QuantumState& psi0, const QuantumState& psi_tar);

struct PrincipalResult {
  OperatorMatrix h;
  /// Set when some eigenphase lies within 1e-8 of the log branch cut at pi;
  /// the generator is still returned (phase kept on the principal branch)
  /// but downstream consumers may want to audit drive amplitudes near the
  /// discontinuity.
  bool near_branch_cut = false;
};

/// Hermitian H with exp(-i H T / lambda) = U and all eigenvalues of H T /
/// lambda in (-pi, pi]. T defaults to 1 so that H = i*lambda*log(U).
PrincipalResult principal_hamiltonian(const TargetUnitary& u, double T = 1.0);

/// Orthonormalized logical basis Q = C G^{-1/2} (C = [zero one], G = C^dag C)
/// and code-space projector P = Q Q^dag.
struct LogicalEmbedding {
  Mat q;  // dim x 2
  Mat p;  // dim x dim
};

/// Throws if the Gram matrix is degenerate (min eigenvalue < 1e-8).
LogicalEmbedding make_embedding(const QuantumState& zero_l, const QuantumState& one_l);

/// U_phys = Q U_L Q^dag + (I - P): acts as U_L on the code subspace and as
/// the identity on its complement.
TargetUnitary embed_logical_gate(const FockSpace& space, const LogicalEmbedding& emb,
                                 const Eigen::Matrix2cd& ul);

/// Average gate fidelity (|Tr(G_tar^dag G_eff)|^2 + d') / (d'(d'+1)), d' = 2.
/// G_eff may be sub-unitary (leakage).
double gate_fidelity(const Eigen::Matrix2cd& g_tar, const Eigen::Matrix2cd& g_eff);

// SU(2)-normalized elementary gates (global phase removed so det = +1, which
// keeps the principal-branch eigenphases off the log branch cut).
Eigen::Matrix2cd hadamard_su2();
Eigen::Matrix2cd phase_su2();
Eigen::Matrix2cd t_su2();
Eigen::Matrix2cd random_su2(std::uint64_t seed);

}  // namespace floq::synth

#endif  // FLOQ_SYNTH_HPP
