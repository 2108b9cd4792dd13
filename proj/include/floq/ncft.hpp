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

#ifndef FLOQ_NCFT_HPP
#define FLOQ_NCFT_HPP

#include <vector>

#include "floq/types.hpp"

namespace floq::ncft {

/// Discretization grid for the plane-wave decomposition:
/// k_n = n * k_f / N_k (n = 1..N_k, k = 0 excluded),
/// tau_m = m * 2*pi / N_t (m = 1..N_t).
struct NcftGrid {
  double k_f = 0.0;
  int N_k = 0;
  int N_t = 0;
  std::vector<double> k;
  std::vector<double> tau;
};

NcftGrid make_grid(double k_f, int N_k, int N_t);

/// Closed-form kernel f_{n,m}(k, tau): with q = |n-m|, lo = min(n,m),
///
///   f_{n,m} = lambda * sqrt(lo!/hi!) * (-i k sqrt(lambda/2))^q
///             * exp(-lambda k^2/4) * L_lo^{(q)}(lambda k^2/2) * e^{i(m-n)tau}.
///
/// This is the two-branch Kummer-function form with the 1F1 reduced through
/// the Kummer transformation to a terminating (Laguerre) polynomial and the
/// exp(+lambda k^2/4) prefactor cancelled analytically, so no large
/// intermediate exponentials appear. The (-i)^q prefactor is fixed by the
/// defining Husimi-Q integral (see kernel_oracle). Throws for k <= 0.
cxd kernel(const FockSpace& space, int n, int m, double k, double tau);

/// tau = 0 value; kernel(n,m,k,tau) = kernel_radial(n,m,k) * e^{i(m-n)tau}.
cxd kernel_radial(const FockSpace& space, int n, int m, double k);

struct OracleOptions {
  int r_points = 400;
  int theta_points = 400;
  double r_max = -1.0;  // <= 0: default 6*sqrt(lambda*(max(n,m)+1))
  double tol = 1e-6;    // relative convergence requirement
};

/// Independent slow oracle: evaluates f_{n,m} by 2-D numerical quadrature of
/// the Husimi-Q construction with H = |n><m| (Gauss-Legendre radially,
/// uniform rule in the periodic angle). Throws if the half-resolution
/// comparison indicates the requested tolerance was not reached.
cxd kernel_oracle(const FockSpace& space, int n, int m, double k, double tau,
                  const OracleOptions& opt = {});

/// Kernel values tabulated on a grid. The tau dependence is the exact phase
/// law e^{i(m-n)tau}, so only the radial profiles are stored.
struct NcftKernelTable {
  FockSpace space;
  NcftGrid grid;
  std::vector<cxd> radial;  // [(n*dim + m)*N_k + ki] = f_{n,m}(k_ki, 0)

  cxd value(int n, int m, int ki, int ti) const;
};

NcftKernelTable make_kernel_table(const FockSpace& space, const NcftGrid& grid);

/// f_tar(k, tau) = sum_{n,m} h_{n,m} f_{n,m}(k, tau) on the grid.
/// Returned matrix is N_k x N_t. Throws on dimension mismatch.
Mat f_target(const OperatorMatrix& h, const NcftKernelTable& table);

/// Sampled drive: amplitude A(k,tau) = k |f_tar| >= 0, phase
/// phi(k,tau) = Arg f_tar in (-pi, pi], and the per-slice envelope beta
/// (initialized to beta0 everywhere).
struct DrivePulse {
  NcftGrid grid;
  RMat amplitude;  // N_k x N_t
  RMat phase;      // N_k x N_t
  RVec envelope;   // N_t
  double beta0 = 1.0;
  double lambda = 1.0;
};

DrivePulse synthesize_pulse(const OperatorMatrix& h, double k_f, int N_k, int N_t,
                            double beta0);
DrivePulse synthesize_pulse(const OperatorMatrix& h, const NcftKernelTable& table,
                            double beta0);

/// Discretized plane-wave resynthesis
///   sum_{k,tau} (dk dtau / 2pi) k f_tar(k,tau) exp(i k (cos tau x + sin tau p))
/// evaluated on `space`. Used to check that the kernel decomposition
/// reproduces the operator it came from.
Mat reconstruct_hamiltonian(const FockSpace& space, const NcftGrid& grid, const Mat& ftar);

}  // namespace floq::ncft

#endif  // FLOQ_NCFT_HPP
