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

#ifndef FLOQ_PIPELINE_HPP
#define FLOQ_PIPELINE_HPP

#include "floq/ncft.hpp"
#include "floq/qlg.hpp"
#include "floq/synth.hpp"
#include "floq/types.hpp"

namespace floq::pipeline {

/// Calibrated project default for the dimensionless Planck constant: the
/// kernel k-support scales as 1/sqrt(lambda), and 0.1 lets the standard
/// k_f = N_k = 40 grid resolve and cover every target used here.
inline constexpr double kDefaultLambda = 0.1;

struct PrepConfig {
  FockSpace sim_space;  // simulation space; dim >= target dim
  int n_t = 64;
  int n_k = 40;
  double k_f = 40.0;
  double beta0 = 1.0;
  double T = 1.0;  // driving periods
};

struct PrepResult {
  ncft::DrivePulse pulse;
  qlg::GateSequence sequence;
  QuantumState prepared;   // on the simulation space
  double fidelity = 0.0;   // |<target (zero-padded)|prepared>|^2
  bool near_branch_cut = false;
};

/// The state-preparation workflow: Householder unitary from vacuum to the
/// target, principal-branch generator, NcFT pulse synthesis, compilation to
/// a gate sequence on the simulation space, and evolution of the vacuum.
/// The target lives on its own (possibly smaller) space; its generator is
/// zero outside that block.
PrepResult prepare_state(const QuantumState& target, const PrepConfig& cfg);

/// Pulse for a target unitary given directly (logical-gate embeddings etc.).
ncft::DrivePulse pulse_for_unitary(const synth::TargetUnitary& u, const PrepConfig& cfg,
                                   bool* near_branch_cut = nullptr);

/// Zero-pads a state into a larger simulation space.
QuantumState embed_state(const QuantumState& psi, const FockSpace& sim_space);

}  // namespace floq::pipeline

#endif  // FLOQ_PIPELINE_HPP
