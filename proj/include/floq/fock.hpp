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

#ifndef FLOQ_FOCK_HPP
#define FLOQ_FOCK_HPP

#include <utility>

#include "floq/types.hpp"

namespace floq::fock {

// ---- states ----------------------------------------------------------------

QuantumState vacuum_state(const FockSpace& space);
QuantumState fock_state(const FockSpace& space, int n);

/// Wraps amplitudes that are already normalized (throws if |norm-1| > 1e-12).
QuantumState make_state(const FockSpace& space, Vec amplitudes);

/// Normalizes explicitly (throws if the norm is ~0). Use this when the raw
/// superposition is unnormalized by construction (codewords etc.).
QuantumState normalized_state(const FockSpace& space, Vec amplitudes);

DensityState pure_density(const QuantumState& psi);

/// Checks Hermiticity / trace / positivity of a density matrix within the
/// stated tolerances; throws on violation.
void validate_density(const DensityState& rho, double herm_tol = 1e-10,
                      double trace_tol = 1e-8, double eig_floor = -1e-8);

// ---- operators -------------------------------------------------------------

/// Annihilation/creation pair: a|n> = sqrt(n)|n-1>, a^dag|n> = sqrt(n+1)|n+1>,
/// truncated to dim x dim.
std::pair<OperatorMatrix, OperatorMatrix> ladder_ops(const FockSpace& space);

/// x = sqrt(lambda/2)(a^dag + a), p = i sqrt(lambda/2)(a^dag - a). Hermitian
/// by construction.
std::pair<OperatorMatrix, OperatorMatrix> quadratures(const FockSpace& space);

OperatorMatrix number_operator(const FockSpace& space);

/// Displacement operator D(alpha) = exp(alpha a^dag - alpha* a) from the
/// closed-form Fock matrix elements (associated Laguerre polynomials). The
/// matrix elements are exact for the untruncated operator; the returned
/// matrix is their dim x dim block.
OperatorMatrix displacement(const FockSpace& space, cxd alpha);

/// Same closed form evaluated at an explicit dimension (used internally for
/// padded-space compositions).
Mat displacement_matrix(int dim, cxd alpha);

/// Plane-wave operator exp(i(kx*x + kp*p)); a displacement with
/// alpha = i sqrt(lambda/2) (kx + i kp).
OperatorMatrix plane_wave(const FockSpace& space, double kx, double kp);

/// Applies D(alpha) to a vector through the normal-ordered factorization
/// e^{-|alpha|^2/2} e^{alpha a^dag} e^{-conj(alpha) a}; both exponentials are
/// exact polynomials in the truncated space. Amplitude displaced above the
/// top level is dropped.
Vec displace_vector(cxd alpha, const Vec& v);

// ---- scalar quantities -----------------------------------------------------

/// |<a|b>|^2. Throws on dimension mismatch.
double fidelity_state(const QuantumState& a, const QuantumState& b);

double mean_photon(const QuantumState& psi);
double mean_photon(const DensityState& rho);

// ---- Wigner function -------------------------------------------------------

struct WignerGrid {
  RVec x;  // axis values
  RVec p;
  RMat w;  // w(i, j) = W(x_i, p_j)
};

struct WignerOptions {
  int nx = 201;
  int np = 201;
  // Half-extent of the grid; <= 0 selects the default 5*sqrt(lambda).
  double xmax = -1.0;
  double pmax = -1.0;
};

/// Wigner function via the displacement-parity formula, evaluated in the
/// padded space: W(x,p) = (1/(pi*lambda)) sum_n (-1)^n |<n|D(-alpha)|psi>|^2
/// with alpha = (x+ip)/sqrt(2*lambda).
WignerGrid wigner(const QuantumState& psi, const WignerOptions& opt = {});
WignerGrid wigner(const DensityState& rho, const WignerOptions& opt = {});

}  // namespace floq::fock

#endif  // FLOQ_FOCK_HPP
