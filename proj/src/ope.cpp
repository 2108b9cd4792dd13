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

#include "floq/ope.hpp"

#include <cmath>
#include <deque>
#include <random>

#include "floq/fock.hpp"

namespace floq::ope {

namespace {

class LossEngine {
 public:
  LossEngine(const OptimizationProblem& p)
      : engine_(p.space, p.pulse, p.T), nt_(engine_.n_slices()) {
    if (std::holds_alternative<StatePrepObjective>(p.objective)) {
      const auto& obj = std::get<StatePrepObjective>(p.objective);
      require_compatible(obj.target.space, p.space, "ope");
      is_gate_ = false;
      terminal_ = obj.target.amp;
      init_ = fock::vacuum_state(p.space).amp;
    } else {
      const auto& obj = std::get<GateObjective>(p.objective);
      if (obj.logical_basis.rows() != p.space.dim || obj.logical_basis.cols() != 2) {
        throw std::invalid_argument("ope: logical basis must be dim x 2");
      }
      is_gate_ = true;
      gtar_ = obj.target;
      terminal_ = obj.logical_basis;
      init_ = obj.logical_basis;
    }
  }

  int n_slices() const { return nt_; }

  double eval(const RVec& beta) const {
    Mat out = engine_.apply(beta, init_);
    return loss_from_final(out);
  }

  // pre[m] = initial columns propagated through slices 0..m-1 (pre[0] = init).
  std::vector<Mat> forward_prefixes(const RVec& beta) const {
    std::vector<Mat> pre(nt_ + 1);
    pre[0] = init_;
    for (int m = 0; m < nt_; ++m) {
      pre[m + 1] = pre[m];
      engine_.apply_slice(m, beta(m), pre[m + 1]);
    }
    return pre;
  }

  // suf[m] = (S_{m..nt-1})^dag applied to the terminal columns; suf[nt] = terminal.
  std::vector<Mat> backward_suffixes(const RVec& beta) const {
    std::vector<Mat> suf(nt_ + 1);
    suf[nt_] = terminal_;
    for (int m = nt_ - 1; m >= 0; --m) {
      suf[m] = suf[m + 1];
      engine_.apply_slice_adjoint(m, beta(m), suf[m]);
    }
    return suf;
  }

  // Loss with slice m's envelope replaced, all other slices cached.
  double loss_at_slice(int m, double beta_m, const Mat& prefix, const Mat& suffix) const {
    Mat mid = prefix;
    engine_.apply_slice(m, beta_m, mid);
    if (!is_gate_) return 1.0 - std::norm(suffix.col(0).dot(mid.col(0)));
    Eigen::Matrix2cd geff = suffix.adjoint() * mid;
    return 1.0 - synth::gate_fidelity(gtar_, geff);
  }

  const qlg::SequenceEngine& engine() const { return engine_; }

 private:
  double loss_from_final(const Mat& out) const {
    if (!is_gate_) return 1.0 - std::norm(terminal_.col(0).dot(out.col(0)));
    Eigen::Matrix2cd geff = Mat(terminal_.adjoint() * out);
    return 1.0 - synth::gate_fidelity(gtar_, geff);
  }

  qlg::SequenceEngine engine_;
  int nt_;
  bool is_gate_ = false;
  Mat terminal_;  // target column (state) or Q (gate)
  Mat init_;
  Eigen::Matrix2cd gtar_;
};

struct LbfgsPair {
  RVec s, y;
  double rho;
};

RVec two_loop(const RVec& grad, const std::deque<LbfgsPair>& hist) {
  RVec q = grad;
  std::vector<double> alpha(hist.size());
  for (int i = int(hist.size()) - 1; i >= 0; --i) {
    alpha[i] = hist[i].rho * hist[i].s.dot(q);
    q -= alpha[i] * hist[i].y;
  }
  if (!hist.empty()) {
    const auto& last = hist.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (size_t i = 0; i < hist.size(); ++i) {
    double beta = hist[i].rho * hist[i].y.dot(q);
    q += (alpha[i] - beta) * hist[i].s;
  }
  return q;
}

}  // namespace

double loss(const OptimizationProblem& problem, const RVec& beta) {
  LossEngine le(problem);
  if (beta.size() != le.n_slices()) throw std::invalid_argument("ope::loss: beta length");
  return le.eval(beta);
}

OptimizationResult optimize(const OptimizationProblem& problem) {
  LossEngine le(problem);
  const int nt = le.n_slices();
  const double lo_all = problem.beta0 - problem.delta;
  const double hi_all = problem.beta0 + problem.delta;
  auto clamp_box = [&](RVec v) {
    for (int i = 0; i < v.size(); ++i) v(i) = std::clamp(v(i), lo_all, hi_all);
    return v;
  };

  OptimizationResult result;
  result.final_loss = std::numeric_limits<double>::infinity();
  int evals = 0;

  auto gradient = [&](const RVec& x) {
    RVec g = RVec::Zero(nt);
    auto pre = le.forward_prefixes(x);
    auto suf = le.backward_suffixes(x);
    for (int m = 0; m < nt; ++m) {
      const double h = 1e-6 * (1.0 + std::abs(x(m)));
      const double hi = std::min(x(m) + h, hi_all);
      const double lo = std::max(x(m) - h, lo_all);
      if (hi - lo < 1e-300) continue;  // delta = 0: the box is a point
      double fhi = le.loss_at_slice(m, hi, pre[m], suf[m + 1]);
      double flo = le.loss_at_slice(m, lo, pre[m], suf[m + 1]);
      evals += 2;
      g(m) = (fhi - flo) / (hi - lo);
    }
    return g;
  };

  std::mt19937_64 rng(problem.seed);
  std::uniform_real_distribution<double> box(lo_all, hi_all);

  const int starts = std::max(1, problem.starts);
  for (int start = 0; start < starts && evals < problem.budget; ++start) {
    RVec x(nt);
    if (start == 0) {
      x.setConstant(problem.beta0);
    } else {
      for (int i = 0; i < nt; ++i) x(i) = box(rng);
    }
    x = clamp_box(x);
    double f = le.eval(x);
    ++evals;
    if (f < result.final_loss) {
      result.final_loss = f;
      result.beta_opt = x;
      result.loss_trace.emplace_back(evals, f);
    }

    std::deque<LbfgsPair> hist;
    RVec g = gradient(x);
    bool converged_this = false;
    while (evals < problem.budget) {
      double pg = (clamp_box(x - g) - x).cwiseAbs().maxCoeff();
      if (pg < problem.tol) {
        converged_this = true;
        break;
      }
      RVec d = -two_loop(g, hist);
      if (d.dot(g) > -1e-14 * d.norm() * g.norm()) d = -g;

      double t = 1.0;
      bool accepted = false;
      RVec xn;
      double fn = f;
      for (int ls = 0; ls < 40 && evals < problem.budget; ++ls) {
        xn = clamp_box(x + t * d);
        fn = le.eval(xn);
        ++evals;
        double decrease = g.dot(xn - x);
        if (fn <= f + 1e-4 * decrease && fn < f) {
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) {
        // Steepest-descent restart; if even that stalls, the point is as
        // converged as the finite-difference noise floor allows.
        if ((d + g).norm() < 1e-14 * g.norm()) {
          converged_this = true;
          break;
        }
        hist.clear();
        d = -g;
        continue;
      }

      RVec gn = gradient(xn);
      RVec s = xn - x;
      RVec y = gn - g;
      double sy = s.dot(y);
      if (sy > 1e-12 * s.norm() * y.norm()) {
        hist.push_back({s, y, 1.0 / sy});
        if (hist.size() > 8) hist.pop_front();
      }
      x = xn;
      f = fn;
      g = gn;
      if (f < result.final_loss) {
        result.final_loss = f;
        result.beta_opt = x;
        result.loss_trace.emplace_back(evals, f);
      }
    }
    result.converged = result.converged || converged_this;
  }

  result.evaluations = evals;
  if (result.beta_opt.size() == 0) result.beta_opt = RVec::Constant(nt, problem.beta0);
  return result;
}

}  // namespace floq::ope
