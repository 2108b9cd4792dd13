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

#ifndef FLOQ_TYPES_HPP
#define FLOQ_TYPES_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace floq {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Truncated bosonic Hilbert space: basis {|0>, ..., |dim-1>}.
///
/// `lambda` is the dimensionless Planck constant entering the quadratures
/// x = sqrt(lambda/2)(a^dag + a), p = i sqrt(lambda/2)(a^dag - a).
/// `pad` is the number of extra buffer levels used internally when operators
/// are composed before truncation; pad < 0 selects the default max(16, dim/2).
struct FockSpace {
  int dim = 0;
  double lambda = 1.0;
  int pad = -1;

  int padding() const { return pad < 0 ? std::max(16, dim / 2) : pad; }
  int padded_dim() const { return dim + padding(); }

  void validate() const {
    if (dim < 2) throw std::invalid_argument("FockSpace: dim must be >= 2");
    if (!(lambda > 0)) throw std::invalid_argument("FockSpace: lambda must be > 0");
    if (pad < -1) throw std::invalid_argument("FockSpace: pad must be >= 0");
  }
};

/// Two spaces host interchangeable states iff dim and lambda agree
/// (padding is an internal construction detail).
inline bool compatible(const FockSpace& a, const FockSpace& b) {
  return a.dim == b.dim && a.lambda == b.lambda;
}

inline void require_compatible(const FockSpace& a, const FockSpace& b, const char* what) {
  if (!compatible(a, b)) throw std::invalid_argument(std::string(what) + ": dimension/lambda mismatch");
}

/// Pure state: complex amplitudes over the Fock basis. Normalized on
/// construction through the factory helpers; evolution routines check norm
/// drift and fail loudly instead of renormalizing.
struct QuantumState {
  FockSpace space;
  Vec amp;
};

/// Mixed state: dim x dim density matrix.
struct DensityState {
  FockSpace space;
  Mat rho;
};

/// Dense operator on a FockSpace. `hermitian` is a hint set by constructors
/// that guarantee it (quadratures, principal Hamiltonians, ...).
struct OperatorMatrix {
  FockSpace space;
  Mat mat;
  bool hermitian = false;
};

}  // namespace floq

#endif  // FLOQ_TYPES_HPP
