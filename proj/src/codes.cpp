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

#include "floq/codes.hpp"

#include <cmath>

#include "floq/fock.hpp"

namespace floq::codes {

std::string kind_name(CodeKind k) {
  switch (k) {
    case CodeKind::Binomial: return "binomial";
    case CodeKind::Cat: return "cat";
    case CodeKind::Gkp: return "gkp";
  }
  return "?";
}

namespace {

// Coherent state |alpha> amplitudes: c_m = e^{-|a|^2/2} a^m / sqrt(m!).
Vec coherent_column(int dim, cxd alpha) {
  Vec c(dim);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int m = 1; m < dim; ++m) c(m) = c(m - 1) * alpha / std::sqrt(double(m));
  return c;
}

// Builds in the padded space, verifies the truncated tail is negligible,
// then truncates and normalizes. The tolerance is per code family: cat
// tails are Gaussian-fast, while the finite-energy GKP comb has an
// exponential photon tail ~ e^{-2 sigma^2 n} (3e-4 above n = 32 at
// sigma = 0.35), so its codewords are only defined as the
// truncated-renormalized comb.
QuantumState truncate_normalized(const FockSpace& space, const Vec& padded, const char* what,
                                 double tail_tol) {
  const double total = padded.squaredNorm();
  const double tail = padded.tail(padded.size() - space.dim).squaredNorm();
  if (tail > tail_tol * total) {
    throw std::invalid_argument(std::string(what) +
                                ": insufficient dim (codeword support crosses the cutoff)");
  }
  return fock::normalized_state(space, padded.head(space.dim));
}

}  // namespace

CodeSpec binomial_code(const FockSpace& space) {
  space.validate();
  if (space.dim < 7) throw std::invalid_argument("binomial_code: dim must be >= 7");
  Vec zero = Vec::Zero(space.dim), one = Vec::Zero(space.dim);
  zero(0) = 0.5;
  zero(4) = std::sqrt(3.0) / 2.0;
  one(2) = std::sqrt(3.0) / 2.0;
  one(6) = 0.5;
  CodeSpec c{CodeKind::Binomial, space, 0.0, 0.0, 0,
             fock::make_state(space, zero), fock::make_state(space, one), {}};
  c.embedding = synth::make_embedding(c.zero_l, c.one_l);
  return c;
}

CodeSpec cat_code(const FockSpace& space, double alpha) {
  space.validate();
  if (!(alpha > 0)) throw std::invalid_argument("cat_code: alpha must be > 0");
  if (space.dim < alpha * alpha + 6.0 * alpha + 10.0) {
    throw std::invalid_argument("cat_code: dim too small for requested alpha");
  }
  const int pd = space.padded_dim();
  Vec plus_x = coherent_column(pd, cxd(alpha, 0)) + coherent_column(pd, cxd(-alpha, 0));
  Vec plus_p = coherent_column(pd, cxd(0, alpha)) + coherent_column(pd, cxd(0, -alpha));
  CodeSpec c{CodeKind::Cat, space, alpha, 0.0, 0,
             truncate_normalized(space, plus_x + plus_p, "cat_code", 1e-8),
             truncate_normalized(space, plus_x - plus_p, "cat_code", 1e-8), {}};
  c.embedding = synth::make_embedding(c.zero_l, c.one_l);
  return c;
}

CodeSpec gkp_code(const FockSpace& space, double sigma, int n_range) {
  space.validate();
  if (!(sigma > 0.0) || sigma > 1.0) throw std::invalid_argument("gkp_code: sigma in (0, 1]");
  if (n_range < 3) throw std::invalid_argument("gkp_code: n_range must be >= 3");
  const int pd = std::max(space.padded_dim(), space.dim + 32);
  const double root = std::sqrt(kPi / 2.0);
  Vec words[2] = {Vec::Zero(pd), Vec::Zero(pd)};
  for (int mu = 0; mu < 2; ++mu) {
    for (int n1 = -n_range; n1 <= n_range; ++n1) {
      for (int n2 = -n_range; n2 <= n_range; ++n2) {
        cxd a(root * (2 * n1 + mu), root * n2);
        double w = std::exp(-sigma * sigma * std::norm(a));
        if (w < 1e-300) continue;
        // e^{-i Re[a] Im[a]} keeps the displacement comb symplectically
        // consistent across the grid.
        cxd phase = std::polar(1.0, -a.real() * a.imag());
        words[mu] += w * phase * coherent_column(pd, a);
      }
    }
  }
  CodeSpec c{CodeKind::Gkp, space, 0.0, sigma, n_range,
             truncate_normalized(space, words[0], "gkp_code", 2e-3),
             truncate_normalized(space, words[1], "gkp_code", 2e-3), {}};
  c.embedding = synth::make_embedding(c.zero_l, c.one_l);
  return c;
}

KlReport kl_check(const QuantumState& zero_l, const QuantumState& one_l,
                  const std::vector<OperatorMatrix>& errors) {
  require_compatible(zero_l.space, one_l.space, "kl_check");
  KlReport r;
  for (const auto& ek : errors) {
    for (const auto& el : errors) {
      Mat e = ek.mat.adjoint() * el.mat;
      cxd d0 = zero_l.amp.dot(e * zero_l.amp);
      cxd d1 = one_l.amp.dot(e * one_l.amp);
      cxd off = zero_l.amp.dot(e * one_l.amp);
      cxd off2 = one_l.amp.dot(e * zero_l.amp);
      r.max_diag_dev = std::max(r.max_diag_dev, std::abs(d0 - d1));
      r.max_offdiag = std::max({r.max_offdiag, std::abs(off), std::abs(off2)});
    }
  }
  return r;
}

KlReport kl_check(const CodeSpec& code, const std::vector<OperatorMatrix>& errors) {
  return kl_check(code.zero_l, code.one_l, errors);
}

}  // namespace floq::codes
