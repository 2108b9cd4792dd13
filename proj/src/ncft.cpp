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

#include "floq/ncft.hpp"

#include <cmath>

#include "floq/fock.hpp"
#include "floq/special.hpp"

namespace floq::ncft {

NcftGrid make_grid(double k_f, int N_k, int N_t) {
  if (!(k_f > 0) || N_k < 1 || N_t < 1) {
    throw std::invalid_argument("make_grid: need k_f > 0, N_k >= 1, N_t >= 1");
  }
  NcftGrid g;
  g.k_f = k_f;
  g.N_k = N_k;
  g.N_t = N_t;
  g.k.resize(N_k);
  g.tau.resize(N_t);
  for (int n = 0; n < N_k; ++n) g.k[n] = (n + 1) * k_f / N_k;
  for (int m = 0; m < N_t; ++m) g.tau[m] = (m + 1) * 2.0 * kPi / N_t;
  return g;
}

namespace {

// (-i)^q: the Hankel reduction of the Husimi integral carries
// J_q(-kr) = (-1)^q J_q(kr), which combines with the i^q Bessel-identity
// factor to -i per step.
const cxd kMinusIPow[4] = {cxd(1, 0), cxd(0, -1), cxd(-1, 0), cxd(0, 1)};

void check_indices(const FockSpace& space, int n, int m, double k) {
  if (n < 0 || m < 0 || n >= space.dim || m >= space.dim) {
    throw std::invalid_argument("kernel: Fock indices out of range");
  }
  if (!(k > 0)) throw std::invalid_argument("kernel: k must be > 0");
}

}  // namespace

cxd kernel_radial(const FockSpace& space, int n, int m, double k) {
  check_indices(space, n, m, k);
  const double lam = space.lambda;
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const int q = hi - lo;
  const double w = 0.5 * lam * k * k;
  double mag = lam * special::sqrt_factorial_ratio(lo, hi) *
               std::pow(k * std::sqrt(0.5 * lam), q) * std::exp(-0.5 * w) *
               special::laguerre(lo, double(q), w);
  return kMinusIPow[q % 4] * mag;
}

cxd kernel(const FockSpace& space, int n, int m, double k, double tau) {
  return kernel_radial(space, n, m, k) * std::polar(1.0, (m - n) * tau);
}

cxd kernel_oracle(const FockSpace& space, int n, int m, double k, double tau,
                  const OracleOptions& opt) {
  check_indices(space, n, m, k);
  const double lam = space.lambda;
  const double rmax =
      opt.r_max > 0 ? opt.r_max : 6.0 * std::sqrt(lam * (std::max(n, m) + 1.0));
  const double lg_norm = 0.5 * (std::lgamma(n + 1.0) + std::lgamma(m + 1.0));

  // f = e^{lam k^2/4}/(2 pi) \int r dr dtheta Q_{n,m}(r,theta) e^{-i k r cos(theta - tau)}
  // with Q_{n,m} = e^{-r^2/(2 lam)} (r/sqrt(2 lam))^{n+m} e^{i(m-n)theta} / sqrt(n! m!).
  auto integrate = [&](int nr, int nth) -> cxd {
    const auto& gl = special::gauss_legendre(nr);
    cxd acc(0.0, 0.0);
    const double dth = 2.0 * kPi / nth;
    for (int ir = 0; ir < nr; ++ir) {
      const double r = 0.5 * rmax * (gl.nodes[ir] + 1.0);
      const double wr = 0.5 * rmax * gl.weights[ir];
      double radial;
      if (n + m == 0) {
        radial = std::exp(-r * r / (2.0 * lam));
      } else {
        radial = std::exp(-r * r / (2.0 * lam) +
                          (n + m) * std::log(r / std::sqrt(2.0 * lam)) - lg_norm);
      }
      cxd th_acc(0.0, 0.0);
      for (int it = 0; it < nth; ++it) {
        const double theta = it * dth;
        th_acc += std::polar(1.0, (m - n) * theta - k * r * std::cos(theta - tau));
      }
      acc += wr * r * radial * th_acc * dth;
    }
    return acc * std::exp(0.25 * lam * k * k) / (2.0 * kPi);
  };

  cxd fine = integrate(opt.r_points, opt.theta_points);
  cxd coarse = integrate(std::max(8, opt.r_points / 2), std::max(8, opt.theta_points / 2));
  double est = std::abs(fine - coarse);
  if (est > opt.tol * std::abs(fine) + 1e-12) {
    throw std::runtime_error("kernel_oracle: quadrature did not converge to tolerance");
  }
  return fine;
}

cxd NcftKernelTable::value(int n, int m, int ki, int ti) const {
  const cxd r = radial[size_t(n * space.dim + m) * grid.N_k + ki];
  return r * std::polar(1.0, (m - n) * grid.tau[ti]);
}

NcftKernelTable make_kernel_table(const FockSpace& space, const NcftGrid& grid) {
  space.validate();
  NcftKernelTable t{space, grid, {}};
  t.radial.resize(size_t(space.dim) * space.dim * grid.N_k);
  for (int n = 0; n < space.dim; ++n) {
    for (int m = 0; m < space.dim; ++m) {
      for (int ki = 0; ki < grid.N_k; ++ki) {
        t.radial[size_t(n * space.dim + m) * grid.N_k + ki] =
            kernel_radial(space, n, m, grid.k[ki]);
      }
    }
  }
  return t;
}

Mat f_target(const OperatorMatrix& h, const NcftKernelTable& table) {
  require_compatible(h.space, table.space, "f_target");
  const int dim = table.space.dim;
  const int nk = table.grid.N_k;
  const int nt = table.grid.N_t;

  // Collapse the (n,m) sum per k onto the difference d = m - n; the tau sum
  // is then a short Fourier series per grid column.
  Mat s = Mat::Zero(2 * dim - 1, nk);  // row d + (dim-1)
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      const cxd hnm = h.mat(n, m);
      if (hnm == cxd(0.0, 0.0)) continue;
      const int row = (m - n) + (dim - 1);
      for (int ki = 0; ki < nk; ++ki) {
        s(row, ki) += hnm * table.radial[size_t(n * dim + m) * nk + ki];
      }
    }
  }
  Mat f = Mat::Zero(nk, nt);
  for (int ti = 0; ti < nt; ++ti) {
    const double tau = table.grid.tau[ti];
    for (int d = -(dim - 1); d <= dim - 1; ++d) {
      const cxd ph = std::polar(1.0, d * tau);
      for (int ki = 0; ki < nk; ++ki) f(ki, ti) += s(d + dim - 1, ki) * ph;
    }
  }
  return f;
}

DrivePulse synthesize_pulse(const OperatorMatrix& h, const NcftKernelTable& table,
                            double beta0) {
  Mat f = f_target(h, table);
  DrivePulse p;
  p.grid = table.grid;
  p.lambda = table.space.lambda;
  p.beta0 = beta0;
  p.amplitude.resize(p.grid.N_k, p.grid.N_t);
  p.phase.resize(p.grid.N_k, p.grid.N_t);
  p.envelope = RVec::Constant(p.grid.N_t, beta0);
  for (int ki = 0; ki < p.grid.N_k; ++ki) {
    for (int ti = 0; ti < p.grid.N_t; ++ti) {
      p.amplitude(ki, ti) = p.grid.k[ki] * std::abs(f(ki, ti));
      double ph = std::arg(f(ki, ti));
      if (ph <= -kPi) ph = kPi;  // keep the principal interval (-pi, pi]
      p.phase(ki, ti) = ph;
    }
  }
  return p;
}

DrivePulse synthesize_pulse(const OperatorMatrix& h, double k_f, int N_k, int N_t,
                            double beta0) {
  return synthesize_pulse(h, make_kernel_table(h.space, make_grid(k_f, N_k, N_t)), beta0);
}

Mat reconstruct_hamiltonian(const FockSpace& space, const NcftGrid& grid, const Mat& ftar) {
  if (ftar.rows() != grid.N_k || ftar.cols() != grid.N_t) {
    throw std::invalid_argument("reconstruct_hamiltonian: f_tar shape mismatch");
  }
  const double dk = grid.k_f / grid.N_k;
  const double dtau = 2.0 * kPi / grid.N_t;
  Mat h = Mat::Zero(space.dim, space.dim);
  for (int ti = 0; ti < grid.N_t; ++ti) {
    const double tau = grid.tau[ti];
    for (int ki = 0; ki < grid.N_k; ++ki) {
      const double k = grid.k[ki];
      Mat pw = fock::plane_wave(space, k * std::cos(tau), k * std::sin(tau)).mat;
      h += (dk * dtau / (2.0 * kPi)) * k * ftar(ki, ti) * pw;
    }
  }
  return h;
}

}  // namespace floq::ncft
