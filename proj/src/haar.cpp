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

#include "floq/haar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "floq/fock.hpp"
#include "floq/parallel.hpp"
#include "floq/pipeline.hpp"

namespace floq::haar {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

double std_normal(std::mt19937_64& rng) {
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = double(rng() >> 11) * 0x1.0p-53;
  double u2 = double(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace

QuantumState sample_state(int d, const FockSpace& space, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("sample_state: d must be >= 2");
  if (space.dim < d) throw std::invalid_argument("sample_state: space smaller than d");
  std::mt19937_64 rng(seed);
  Vec v = Vec::Zero(space.dim);
  for (int i = 0; i < d; ++i) v(i) = cxd(std_normal(rng), std_normal(rng));
  return fock::normalized_state(space, std::move(v));
}

QuantumState sample_state(int d, double lambda, std::uint64_t seed) {
  return sample_state(d, FockSpace{d, lambda, 0}, seed);
}

double ks_against_haar(std::vector<double> fid, int d) {
  std::sort(fid.begin(), fid.end());
  const double n = double(fid.size());
  double ks = 0.0;
  for (size_t i = 0; i < fid.size(); ++i) {
    double cdf = 1.0 - std::pow(1.0 - std::clamp(fid[i], 0.0, 1.0), d - 1);
    ks = std::max(ks, std::abs((i + 1) / n - cdf));
    ks = std::max(ks, std::abs(i / n - cdf));
  }
  return ks;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double ks = 0.0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    ks = std::max(ks, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  return ks;
}

HaarBenchmarkReport benchmark(const BenchmarkConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("benchmark: samples >= 1");
  if (cfg.headroom < 8) throw std::invalid_argument("benchmark: headroom >= 8");
  FockSpace sim{cfg.d + cfg.headroom, cfg.lambda, -1};
  FockSpace target_space{cfg.d, cfg.lambda, 0};

  HaarBenchmarkReport rep;
  rep.d = cfg.d;
  rep.n_t = cfg.n_t;
  rep.fock_dim = sim.dim;
  rep.samples = cfg.samples;

  // Index 0 of the stream is the fixed reference state.
  auto ref = pipeline::embed_state(sample_state(cfg.d, target_space, mix_seed(cfg.seed, 0)), sim);

  pipeline::PrepConfig pc{sim, cfg.n_t, cfg.n_k, cfg.k_f, cfg.beta0, 1.0};
  std::vector<double> prep(cfg.samples, -1.0), to_ref(cfg.samples, -1.0);
  parallel_for(cfg.samples, cfg.workers, [&](int idx) {
    const int i = idx + 1;
    try {
      auto target = sample_state(cfg.d, target_space, mix_seed(cfg.seed, i));
      auto res = pipeline::prepare_state(target, pc);
      prep[idx] = res.fidelity;
      to_ref[idx] = fock::fidelity_state(res.prepared, ref);
    } catch (const std::exception&) {
      // recorded as a failure below
    }
  });
  for (int idx = 0; idx < cfg.samples; ++idx) {
    if (prep[idx] < 0.0) {
      ++rep.failures;
      continue;
    }
    rep.prep_fidelities.push_back(prep[idx]);
    rep.fidelities_to_ref.push_back(to_ref[idx]);
  }

  const auto& f = rep.fidelities_to_ref;
  if (!rep.prep_fidelities.empty()) {
    rep.mean_prep_fidelity =
        std::accumulate(rep.prep_fidelities.begin(), rep.prep_fidelities.end(), 0.0) /
        rep.prep_fidelities.size();
    rep.mean_fidelity_to_ref = std::accumulate(f.begin(), f.end(), 0.0) / f.size();
    rep.ks_statistic = ks_against_haar(f, cfg.d);
  }

  rep.bin_edges.resize(cfg.hist_bins + 1);
  rep.bin_counts.assign(cfg.hist_bins, 0);
  for (int b = 0; b <= cfg.hist_bins; ++b) rep.bin_edges[b] = double(b) / cfg.hist_bins;
  for (double v : f) {
    int b = std::min(cfg.hist_bins - 1, int(std::clamp(v, 0.0, 1.0) * cfg.hist_bins));
    ++rep.bin_counts[b];
  }
  return rep;
}

}  // namespace floq::haar
