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

#include "floq/pipeline.hpp"

#include "floq/fock.hpp"

namespace floq::pipeline {

QuantumState embed_state(const QuantumState& psi, const FockSpace& sim_space) {
  if (psi.space.dim > sim_space.dim || psi.space.lambda != sim_space.lambda) {
    throw std::invalid_argument("embed_state: simulation space too small or lambda mismatch");
  }
  Vec v = Vec::Zero(sim_space.dim);
  v.head(psi.space.dim) = psi.amp;
  return {sim_space, std::move(v)};
}

ncft::DrivePulse pulse_for_unitary(const synth::TargetUnitary& u, const PrepConfig& cfg,
                                   bool* near_branch_cut) {
  auto hres = synth::principal_hamiltonian(u, cfg.T);
  if (near_branch_cut) *near_branch_cut = hres.near_branch_cut;
  return ncft::synthesize_pulse(hres.h, cfg.k_f, cfg.n_k, cfg.n_t, cfg.beta0);
}

PrepResult prepare_state(const QuantumState& target, const PrepConfig& cfg) {
  cfg.sim_space.validate();
  auto u = synth::householder_unitary(fock::vacuum_state(target.space), target);
  PrepResult r;
  r.pulse = pulse_for_unitary(u, cfg, &r.near_branch_cut);
  r.sequence = qlg::compile(cfg.sim_space, r.pulse, cfg.T);
  r.prepared = qlg::apply_sequence(r.sequence, fock::vacuum_state(cfg.sim_space));
  r.fidelity = fock::fidelity_state(embed_state(target, cfg.sim_space), r.prepared);
  return r;
}

}  // namespace floq::pipeline
