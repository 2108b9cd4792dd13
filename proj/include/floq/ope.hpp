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

#ifndef FLOQ_OPE_HPP
#define FLOQ_OPE_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "floq/ncft.hpp"
#include "floq/qlg.hpp"
#include "floq/synth.hpp"
#include "floq/types.hpp"

namespace floq::ope {

/// State preparation from vacuum: L = 1 - |<target|psi(beta)>|^2.
struct StatePrepObjective {
  QuantumState target;  // on the simulation space
};

/// Logical gate: L = 1 - F_gate(target, Q^dag G(beta) Q).
struct GateObjective {
  Eigen::Matrix2cd target;
  Mat logical_basis;  // orthonormalized Q, dim x 2
};

using Objective = std::variant<StatePrepObjective, GateObjective>;

struct OptimizationProblem {
  Objective objective;
  ncft::DrivePulse pulse;
  FockSpace space;    // simulation space
  double delta = 1.0; // box half-width: |beta_m - beta0| <= delta
  double beta0 = 1.0;
  double T = 1.0;
  int budget = 200000;  // maximum loss evaluations (finite-difference probes included)
  double tol = 1e-9;    // projected-gradient convergence threshold
  int starts = 1;       // first start is beta0; extras are seeded random points in the box
  std::uint64_t seed = 0;
};

struct OptimizationResult {
  RVec beta_opt;
  std::vector<std::pair<int, double>> loss_trace;  // (evaluation index, loss), accepted steps
  double final_loss = 1.0;
  bool converged = false;
  int evaluations = 0;
};

/// Single honest loss evaluation: recompiles the sequence for this envelope
/// and evolves. Bit-deterministic for fixed inputs.
double loss(const OptimizationProblem& problem, const RVec& beta);

/// Projected quasi-Newton (L-BFGS with Armijo backtracking and curvature-
/// guarded updates) over the box |beta - beta0| <= delta. The gradient is
/// central finite differences with step 1e-6 (1 + |beta_m|); probes are
/// clamped into the box (one-sided at active bounds), and each probe reuses
/// cached forward/backward partial evolutions so it costs one slice, not a
/// full sequence. Returns the best-seen point.
OptimizationResult optimize(const OptimizationProblem& problem);

}  // namespace floq::ope

#endif  // FLOQ_OPE_HPP
