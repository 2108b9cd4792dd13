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

#include "floq/io.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace floq::io {

namespace {

json complex_to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }
cxd complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json rvec_to_json(const RVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

RVec rvec_from_json(const json& j) {
  RVec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(int(i)) = j.at(i).get<double>();
  return v;
}

json rmat_to_json(const RMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int c = 0; c < m.cols(); ++c) r.push_back(m(i, c));
    rows.push_back(std::move(r));
  }
  return rows;
}

RMat rmat_from_json(const json& j) {
  const int rows = int(j.size());
  const int cols = rows ? int(j.at(0).size()) : 0;
  RMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = j.at(i).at(c).get<double>();
  return m;
}

// CSV doubles: max_digits10 so re-parsing reproduces the exact value.
std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

json space_to_json(const FockSpace& s) {
  return json{{"dim", s.dim}, {"lambda", s.lambda}, {"pad", s.pad}};
}

FockSpace space_from_json(const json& j) {
  FockSpace s{j.at("dim").get<int>(), j.at("lambda").get<double>(),
              j.value("pad", -1)};
  s.validate();
  return s;
}

json state_to_json(const QuantumState& psi) {
  json amps = json::array();
  for (int i = 0; i < psi.amp.size(); ++i) amps.push_back(complex_to_json(psi.amp(i)));
  return json{{"space", space_to_json(psi.space)}, {"amplitudes", std::move(amps)}};
}

QuantumState state_from_json(const json& j) {
  FockSpace s = space_from_json(j.at("space"));
  const auto& amps = j.at("amplitudes");
  Vec v(amps.size());
  for (size_t i = 0; i < amps.size(); ++i) v(int(i)) = complex_from_json(amps.at(i));
  return fock::make_state(s, std::move(v));
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int c = 0; c < m.cols(); ++c) r.push_back(complex_to_json(m(i, c)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  const int rows = int(j.size());
  const int cols = rows ? int(j.at(0).size()) : 0;
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = complex_from_json(j.at(i).at(c));
  return m;
}

json pulse_to_json(const ncft::DrivePulse& p) {
  json kg = json::array(), tg = json::array();
  for (double k : p.grid.k) kg.push_back(k);
  for (double t : p.grid.tau) tg.push_back(t);
  return json{{"k_f", p.grid.k_f},       {"N_k", p.grid.N_k},
              {"N_t", p.grid.N_t},       {"k_grid", std::move(kg)},
              {"tau_grid", std::move(tg)}, {"amplitude", rmat_to_json(p.amplitude)},
              {"phase", rmat_to_json(p.phase)}, {"envelope", rvec_to_json(p.envelope)},
              {"beta0", p.beta0},        {"lambda", p.lambda}};
}

ncft::DrivePulse pulse_from_json(const json& j) {
  ncft::DrivePulse p;
  p.grid = ncft::make_grid(j.at("k_f").get<double>(), j.at("N_k").get<int>(),
                           j.at("N_t").get<int>());
  if (j.contains("k_grid")) {
    for (size_t i = 0; i < j.at("k_grid").size(); ++i) p.grid.k[i] = j.at("k_grid").at(i);
  }
  if (j.contains("tau_grid")) {
    for (size_t i = 0; i < j.at("tau_grid").size(); ++i) p.grid.tau[i] = j.at("tau_grid").at(i);
  }
  p.amplitude = rmat_from_json(j.at("amplitude"));
  p.phase = rmat_from_json(j.at("phase"));
  p.envelope = rvec_from_json(j.at("envelope"));
  p.beta0 = j.at("beta0").get<double>();
  p.lambda = j.at("lambda").get<double>();
  if (p.amplitude.rows() != p.grid.N_k || p.amplitude.cols() != p.grid.N_t ||
      p.phase.rows() != p.grid.N_k || p.envelope.size() != p.grid.N_t) {
    throw std::invalid_argument("pulse_from_json: inconsistent shapes");
  }
  return p;
}

json sequence_to_json(const qlg::GateSequence& s) {
  json gates = json::array();
  for (const auto& g : s.gates) gates.push_back(json::array({g.theta, g.gamma, g.k}));
  return json{{"space", space_to_json(s.space)},
              {"meta",
               {{"N_t", s.meta.N_t},
                {"N_k", s.meta.N_k},
                {"k_f", s.meta.k_f},
                {"beta0", s.meta.beta0},
                {"T", s.meta.T}}},
              {"gates", std::move(gates)}};
}

qlg::GateSequence sequence_from_json(const json& j) {
  qlg::GateSequence s;
  s.space = space_from_json(j.at("space"));
  const auto& m = j.at("meta");
  s.meta = {m.at("N_t").get<int>(), m.at("N_k").get<int>(), m.at("k_f").get<double>(),
            m.at("beta0").get<double>(), m.at("T").get<double>()};
  for (const auto& g : j.at("gates")) {
    s.gates.push_back({g.at(0).get<double>(), g.at(1).get<double>(), g.at(2).get<double>()});
  }
  if (s.gates.size() != size_t(s.meta.N_t) * s.meta.N_k) {
    throw std::invalid_argument("sequence_from_json: gate count mismatch");
  }
  return s;
}

json unitary_to_json(const synth::TargetUnitary& u) {
  return json{{"space", space_to_json(u.space)}, {"matrix", matrix_to_json(u.mat)}};
}

synth::TargetUnitary unitary_from_json(const json& j) {
  synth::TargetUnitary u{space_from_json(j.at("space")), matrix_from_json(j.at("matrix"))};
  synth::require_unitary(u, 1e-8);
  return u;
}

json haar_report_to_json(const haar::HaarBenchmarkReport& r) {
  return json{{"d", r.d},
              {"N_t", r.n_t},
              {"fock_dim", r.fock_dim},
              {"samples", r.samples},
              {"failures", r.failures},
              {"mean_prep_fidelity", r.mean_prep_fidelity},
              {"mean_fidelity_to_ref", r.mean_fidelity_to_ref},
              {"ks_statistic", r.ks_statistic},
              {"histogram", {{"edges", r.bin_edges}, {"counts", r.bin_counts}}}};
}

json optimization_result_to_json(const ope::OptimizationResult& r) {
  json trace = json::array();
  for (const auto& [idx, l] : r.loss_trace) trace.push_back(json::array({idx, l}));
  return json{{"beta_opt", rvec_to_json(r.beta_opt)},
              {"final_loss", r.final_loss},
              {"converged", r.converged},
              {"evaluations", r.evaluations},
              {"loss_trace", std::move(trace)}};
}

void write_wigner_csv(const std::string& path, const fock::WignerGrid& g) {
  std::ostringstream os;
  os << "x\\p";
  for (int j = 0; j < g.p.size(); ++j) os << "," << fmt(g.p(j));
  os << "\n";
  for (int i = 0; i < g.x.size(); ++i) {
    os << fmt(g.x(i));
    for (int j = 0; j < g.p.size(); ++j) os << "," << fmt(g.w(i, j));
    os << "\n";
  }
  write_text(path, os.str());
}

void write_wigner_sidecar(const std::string& path, const fock::WignerGrid& g,
                          const FockSpace& space) {
  json j{{"rows", "x"},
         {"cols", "p"},
         {"nx", g.x.size()},
         {"np", g.p.size()},
         {"x_min", g.x(0)},
         {"x_max", g.x(g.x.size() - 1)},
         {"p_min", g.p(0)},
         {"p_max", g.p(g.p.size() - 1)},
         {"normalization", "int W dx dp = 1"},
         {"space", space_to_json(space)}};
  write_text(path, j.dump(2) + "\n");
}

void write_grid_csv(const std::string& path, const ncft::NcftGrid& grid, const RMat& values) {
  if (values.rows() != grid.N_k || values.cols() != grid.N_t) {
    throw std::invalid_argument("write_grid_csv: shape mismatch");
  }
  std::ostringstream os;
  os << "k\\tau";
  for (double t : grid.tau) os << "," << fmt(t);
  os << "\n";
  for (int ki = 0; ki < grid.N_k; ++ki) {
    os << fmt(grid.k[ki]);
    for (int ti = 0; ti < grid.N_t; ++ti) os << "," << fmt(values(ki, ti));
    os << "\n";
  }
  write_text(path, os.str());
}

void write_loss_trace_csv(const std::string& path, const ope::OptimizationResult& r) {
  std::ostringstream os;
  os << "evaluation,loss\n";
  for (const auto& [idx, l] : r.loss_trace) os << idx << "," << fmt(l) << "\n";
  write_text(path, os.str());
}

void write_histogram_csv(const std::string& path, const haar::HaarBenchmarkReport& r) {
  std::ostringstream os;
  os << "bin_low,bin_high,count\n";
  for (size_t b = 0; b + 1 < r.bin_edges.size(); ++b) {
    os << fmt(r.bin_edges[b]) << "," << fmt(r.bin_edges[b + 1]) << "," << r.bin_counts[b]
       << "\n";
  }
  write_text(path, os.str());
}

void write_amplitudes_csv(const std::string& path, const QuantumState& psi) {
  std::ostringstream os;
  os << "n,re,im,prob\n";
  for (int n = 0; n < psi.amp.size(); ++n) {
    os << n << "," << fmt(psi.amp(n).real()) << "," << fmt(psi.amp(n).imag()) << ","
       << fmt(std::norm(psi.amp(n))) << "\n";
  }
  write_text(path, os.str());
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_text: cannot open " + path);
  f << content;
  if (!f) throw std::runtime_error("write_text: write failed for " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_text: cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json make_manifest(const json& config) {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a(config.dump());
  return json{{"tool", "floq"},
              {"version", kVersion},
              {"config_hash", hash.str()},
              {"generated_at", ts.str()},
              {"config", config}};
}

}  // namespace floq::io
