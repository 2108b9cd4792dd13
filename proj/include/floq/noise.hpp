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

#ifndef FLOQ_NOISE_HPP
#define FLOQ_NOISE_HPP

#include <cstdint>

#include "floq/qlg.hpp"
#include "floq/types.hpp"

namespace floq::noise {

struct NoiseConfig {
  double kappa = 0.0;  // single-photon loss rate in units of omega_0
  double zeta = 0.0;   // amplitude-noise strength
  std::uint64_t seed = 0;
  int dt_substeps = 4;  // RK4 steps per piecewise-constant segment
  // true: one segment per cosine kick (continuum limit equals the gate
  // product exactly, so kappa = 0 reproduces apply_sequence). false: one
  // summed Hamiltonian per time slice; with exactly-truncated cosines the
  // sum differs from the kick product by truncation commutators (~1e-2 at
  // full drive), so use it only when that bias is acceptable.
  bool split_kicks = true;
};

/// Integrates d rho / ds = -(i/lambda)[H(s), rho] + kappa D[a] rho over one
/// period (s = omega_0 t in (0, 2pi]) with the piecewise drive of the
/// sequence in the rotating frame and fixed-step RK4. Throws if the trace
/// drifts beyond 1e-6.
DensityState lindblad_evolve(const qlg::GateSequence& seq, const DensityState& rho0,
                             const NoiseConfig& cfg);

/// No-jump fidelity ceiling exp(-kappa * int_0^T nbar(s) ds), with nbar
/// sampled per slice along the lossless trajectory and accumulated by the
/// trapezoid rule.
double coherent_bound(const qlg::GateSequence& seq, const QuantumState& psi0, double kappa);

/// beta_m -> beta_m + zeta xi_m / sqrt(dtau), xi i.i.d. standard normal
/// (discrete white noise matching <xi(t) xi(t')> = delta(t - t'), so the
/// perturbation is grid independent in distribution). Deterministic per
/// seed.
RVec noisy_envelope(const RVec& beta, double zeta, std::uint64_t seed);

}  // namespace floq::noise

#endif  // FLOQ_NOISE_HPP
