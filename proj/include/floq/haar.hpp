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

#ifndef FLOQ_HAAR_HPP
#define FLOQ_HAAR_HPP

#include <cstdint>
#include <vector>

#include "floq/types.hpp"

namespace floq::haar {

/// splitmix64 of (seed, index): sample i is a pure function of both, so
/// parallel or resumed sampling reproduces the same stream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-random pure state on d levels (normalized complex Gaussian vector),
/// zero-padded into `space` (space.dim >= d). Deterministic per seed,
/// identical across platforms (hand-rolled Box-Muller over mt19937_64).
QuantumState sample_state(int d, const FockSpace& space, std::uint64_t seed);

/// Haar state on its own d-dimensional space.
QuantumState sample_state(int d, double lambda, std::uint64_t seed);

struct BenchmarkConfig {
  int d = 4;
  int n_t = 64;
  int n_k = 40;
  double k_f = 40.0;
  int samples = 200;
  std::uint64_t seed = 1;
  double beta0 = 1.0;
  double lambda = 0.1;
  int headroom = 8;  // simulation levels above d (minimum 8)
  int hist_bins = 40;
  int workers = 1;  // per-sample pipelines are embarrassingly parallel
};

struct HaarBenchmarkReport {
  int d = 0;
  int n_t = 0;
  int fock_dim = 0;  // simulation cutoff actually used
  int samples = 0;
  int failures = 0;
  double mean_prep_fidelity = 0.0;    // mean F_QLG = |<psi_QLG|psi_Haar>|^2
  double mean_fidelity_to_ref = 0.0;  // mean F = |<psi_QLG|psi_ref>|^2
  double ks_statistic = 0.0;          // empirical F vs 1 - (1-F)^{d-1}
  std::vector<double> bin_edges;      // hist_bins + 1 edges over [0, 1]
  std::vector<int> bin_counts;
  std::vector<double> fidelities_to_ref;
  std::vector<double> prep_fidelities;
};

/// Per sample: Householder unitary from vacuum to the sampled state,
/// principal generator, NcFT pulse, QLG compilation, vacuum evolution;
/// records F_QLG and the fidelity to a fixed reference state drawn once
/// from the same seed stream. Per-sample failures are counted, not fatal.
HaarBenchmarkReport benchmark(const BenchmarkConfig& cfg);

/// Kolmogorov-Smirnov statistic of a fidelity sample against the analytic
/// Haar CDF 1 - (1 - F)^{d-1}.
double ks_against_haar(std::vector<double> fidelities, int d);

/// Two-sample KS statistic (used for the distributional-invariance check).
double ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace floq::haar

#endif  // FLOQ_HAAR_HPP
