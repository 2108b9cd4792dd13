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

#ifndef FLOQ_CODES_HPP
#define FLOQ_CODES_HPP

#include <string>
#include <vector>

#include "floq/synth.hpp"
#include "floq/types.hpp"

namespace floq::codes {

enum class CodeKind { Binomial, Cat, Gkp };

std::string kind_name(CodeKind k);

/// A bosonic code: the two codewords plus the orthonormalized logical basis
/// and code-space projector.
struct CodeSpec {
  CodeKind kind;
  FockSpace space;
  double alpha = 0.0;  // Cat coherent amplitude
  double sigma = 0.0;  // GKP width
  int n_range = 0;     // GKP grid extent
  QuantumState zero_l;
  QuantumState one_l;
  synth::LogicalEmbedding embedding;
};

/// Lowest-order binomial code: |0_L> = (|0> + sqrt(3)|4>)/2,
/// |1_L> = (sqrt(3)|2> + |6>)/2. Needs dim >= 7.
CodeSpec binomial_code(const FockSpace& space);

/// Four-component cat code at coherent amplitude alpha (default: the second
/// Knill-Laflamme sweet spot). Needs dim >= alpha^2 + 6 alpha + 10 so the
/// truncated coherent components carry < 1e-8 of their norm above the
/// cutoff.
CodeSpec cat_code(const FockSpace& space, double alpha = 2.3447);

/// Finite-energy GKP code of width sigma: Gaussian-weighted displacement
/// combs over the grid sqrt(pi/2)(2 n1 + mu) + i sqrt(pi/2) n2 with the
/// symplectic phase factor, n1, n2 in [-n_range, n_range].
CodeSpec gkp_code(const FockSpace& space, double sigma = 0.35, int n_range = 8);

/// Knill-Laflamme diagnostics for an error set {eps_k}: largest deviation of
/// <0|E|0> = <1|E|1> and largest |<0|E|1>| over all pairs E = eps_k^dag eps_l.
struct KlReport {
  double max_diag_dev = 0.0;
  double max_offdiag = 0.0;
};

KlReport kl_check(const CodeSpec& code, const std::vector<OperatorMatrix>& errors);
KlReport kl_check(const QuantumState& zero_l, const QuantumState& one_l,
                  const std::vector<OperatorMatrix>& errors);

}  // namespace floq::codes

#endif  // FLOQ_CODES_HPP
