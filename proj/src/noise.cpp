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

#include "floq/noise.hpp"

#include <cmath>
#include <random>

#include "floq/fock.hpp"

namespace floq::noise {

namespace {

// -(i/lambda)[H, rho] + kappa (a rho a^dag - {n, rho}/2); the ladder terms
// are written out index-wise (a is a single subdiagonal).
Mat lindblad_rhs(const Mat* h, const Mat& rho, double lambda, double kappa) {
  const int dim = int(rho.rows());
  Mat out;
  if (h) {
    out = cxd(0, -1) / lambda * ((*h) * rho - rho * (*h));
  } else {
    out = Mat::Zero(dim, dim);
  }
  if (kappa > 0) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        cxd gain = (i + 1 < dim && j + 1 < dim)
                       ? std::sqrt(double(i + 1)) * std::sqrt(double(j + 1)) * rho(i + 1, j + 1)
                       : cxd(0, 0);
        out(i, j) += kappa * (gain - 0.5 * (i + j) * rho(i, j));
      }
    }
  }
  return out;
}

void rk4_segment(Mat& rho, const Mat* h, double duration, int steps, double lambda,
                 double kappa) {
  const double dt = duration / steps;
  for (int s = 0; s < steps; ++s) {
    Mat k1 = lindblad_rhs(h, rho, lambda, kappa);
    Mat k2 = lindblad_rhs(h, Mat(rho + 0.5 * dt * k1), lambda, kappa);
    Mat k3 = lindblad_rhs(h, Mat(rho + 0.5 * dt * k2), lambda, kappa);
    Mat k4 = lindblad_rhs(h, Mat(rho + dt * k3), lambda, kappa);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

// cos(k x + gamma) rotated to the frame angle of time slice m:
// elementwise e^{i (j - l) tau_m} conjugation.
Mat rotated_cosine(const FockSpace& space, double k, double gamma, double tau_m) {
  Mat c = qlg::cosine_potential(space, k, gamma).mat;
  for (int j = 0; j < space.dim; ++j) {
    for (int l = 0; l < space.dim; ++l) c(j, l) *= std::polar(1.0, (j - l) * tau_m);
  }
  return c;
}

}  // namespace

DensityState lindblad_evolve(const qlg::GateSequence& seq, const DensityState& rho0,
                             const NoiseConfig& cfg) {
  require_compatible(seq.space, rho0.space, "lindblad_evolve");
  if (cfg.dt_substeps < 1) throw std::invalid_argument("lindblad_evolve: dt_substeps >= 1");
  fock::validate_density(rho0);
  const int nt = seq.meta.N_t;
  const int nk = seq.meta.N_k;
  const double dtau = 2.0 * kPi / nt;
  const double lambda = seq.space.lambda;

  Mat rho = rho0.rho;
  for (int m = 0; m < nt; ++m) {
    if (cfg.split_kicks) {
      // One piecewise-constant segment per cosine kick; the continuum limit
      // of these segments is exactly the gate product the pure simulator
      // applies.
      const double tau_m = (m + 1) * dtau;
      const double dt_gate = dtau / nk;
      for (int n = 0; n < nk; ++n) {
        const auto& gp = seq.gates[size_t(m) * nk + n];
        if (gp.theta == 0.0 && cfg.kappa == 0.0) continue;
        if (gp.theta == 0.0) {
          rk4_segment(rho, nullptr, dt_gate, cfg.dt_substeps, lambda, cfg.kappa);
        } else {
          Mat h = (gp.theta / dt_gate) * rotated_cosine(seq.space, gp.k, gp.gamma, tau_m);
          rk4_segment(rho, &h, dt_gate, cfg.dt_substeps, lambda, cfg.kappa);
        }
      }
    } else {
      Mat h = qlg::slice_hamiltonian(seq, m).mat;
      rk4_segment(rho, &h, dtau, cfg.dt_substeps, lambda, cfg.kappa);
    }
    double drift = std::abs(rho.trace().real() - 1.0);
    if (drift > 1e-6) {
      throw std::runtime_error("lindblad_evolve: trace drift " + std::to_string(drift) +
                               " (step too coarse)");
    }
  }
  return {rho0.space, std::move(rho)};
}

double coherent_bound(const qlg::GateSequence& seq, const QuantumState& psi0, double kappa) {
  require_compatible(seq.space, psi0.space, "coherent_bound");
  if (kappa == 0.0) return 1.0;
  const int nt = seq.meta.N_t;
  const double dtau = 2.0 * kPi / nt;
  qlg::GateCache cache(seq.space, seq.gates.size() + 1);

  // Lossless trajectory, one slice propagator at a time (the slice acts as
  // O(tau_m) [prod_n g_n] O(tau_m)^dag in the rotating frame).
  double integral = 0.0;
  double nbar_prev = fock::mean_photon(psi0);
  QuantumState psi = psi0;
  for (int m = 0; m < nt; ++m) {
    const double tau_m = (m + 1) * dtau;
    Vec amp = psi.amp;
    for (int n = 0; n < seq.space.dim; ++n) amp(n) *= std::polar(1.0, -n * tau_m);
    Mat cols = amp;
    for (int n = 0; n < seq.meta.N_k; ++n) {
      const auto& gp = seq.gates[size_t(m) * seq.meta.N_k + n];
      if (gp.theta == 0.0) continue;
      const auto& e = cache.get(gp.gamma, gp.k);
      Mat tmp = e.v.adjoint() * cols;
      for (int j = 0; j < e.w.size(); ++j) {
        tmp.row(j) *= std::polar(1.0, -gp.theta / seq.space.lambda * e.w(j));
      }
      cols = e.v * tmp;
    }
    amp = cols.col(0);
    for (int n = 0; n < seq.space.dim; ++n) amp(n) *= std::polar(1.0, n * tau_m);
    psi.amp = std::move(amp);

    double nbar = fock::mean_photon(psi);
    integral += 0.5 * dtau * (nbar_prev + nbar);
    nbar_prev = nbar;
  }
  return std::exp(-kappa * integral);
}

RVec noisy_envelope(const RVec& beta, double zeta, std::uint64_t seed) {
  if (zeta < 0) throw std::invalid_argument("noisy_envelope: zeta must be >= 0");
  if (zeta == 0.0) return beta;
  const int nt = int(beta.size());
  const double dtau = 2.0 * kPi / nt;
  std::mt19937_64 rng(seed);
  // Hand-rolled Box-Muller over the standardized engine stream keeps the
  // draw sequence identical across standard libraries.
  auto normal = [&rng]() {
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = double(rng() >> 11) * 0x1.0p-53;
    double u2 = double(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  };
  RVec out = beta;
  for (int m = 0; m < nt; ++m) out(m) += zeta * normal() / std::sqrt(dtau);
  return out;
}

}  // namespace floq::noise
