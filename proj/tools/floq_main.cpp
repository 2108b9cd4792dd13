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

// Command-line front end: pipelines for state preparation, envelope
// optimization, Haar benchmarking, noise sweeps, and codeword export.
// Every command is a pure function of (config, seeds); timestamps appear
// only inside manifest.json.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "floq/codes.hpp"
#include "floq/fock.hpp"
#include "floq/haar.hpp"
#include "floq/io.hpp"
#include "floq/noise.hpp"
#include "floq/ope.hpp"
#include "floq/parallel.hpp"
#include "floq/pipeline.hpp"

namespace fs = std::filesystem;
using floq::io::json;
using namespace floq;

namespace {

struct ConfigError : std::runtime_error {
  std::string kind;
  ConfigError(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
};

void emit_error(const std::string& kind, const std::string& message) {
  json err{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << std::endl;
}

// Flags win over config-file values; config values win over defaults.
template <typename T>
void merge_opt(const CLI::Option* opt, T& value, const json& cfg, const char* key) {
  if (opt != nullptr && opt->count() > 0) return;
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  if (!fs::exists(path)) throw ConfigError("config-not-found", "config file missing: " + path);
  try {
    return json::parse(io::read_text(path));
  } catch (const std::exception& e) {
    throw ConfigError("config-parse-error", e.what());
  }
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw ConfigError("output-dir-error", "cannot create " + dir + ": " + ec.message());
  return p;
}

codes::CodeKind parse_code_kind(const std::string& name) {
  if (name == "binomial") return codes::CodeKind::Binomial;
  if (name == "cat") return codes::CodeKind::Cat;
  if (name == "gkp") return codes::CodeKind::Gkp;
  throw ConfigError("config-error", "unknown code: " + name);
}

codes::CodeSpec build_code(codes::CodeKind kind, const FockSpace& space, double alpha,
                           double sigma, int n_range) {
  switch (kind) {
    case codes::CodeKind::Binomial: return codes::binomial_code(space);
    case codes::CodeKind::Cat: return codes::cat_code(space, alpha);
    case codes::CodeKind::Gkp: return codes::gkp_code(space, sigma, n_range);
  }
  throw ConfigError("config-error", "unknown code kind");
}

Eigen::Matrix2cd named_gate(const std::string& name, std::uint64_t seed) {
  if (name == "H") return synth::hadamard_su2();
  if (name == "S") return synth::phase_su2();
  if (name == "T") return synth::t_su2();
  if (name == "random-SU2") return synth::random_su2(seed);
  throw ConfigError("config-error", "unknown gate: " + name + " (H, S, T, random-SU2)");
}

// "lo:hi:logN" -> N log-spaced points, "lo:hi:N" -> N linear points.
std::vector<double> parse_sweep(const std::string& spec) {
  auto c1 = spec.find(':');
  auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ConfigError("config-error", "sweep must be lo:hi:N or lo:hi:logN, got " + spec);
  }
  double lo = std::stod(spec.substr(0, c1));
  double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  std::string count = spec.substr(c2 + 1);
  bool log_spaced = count.rfind("log", 0) == 0;
  int n = std::stoi(log_spaced ? count.substr(3) : count);
  if (n < 1) throw ConfigError("config-error", "sweep needs at least one point");
  std::vector<double> pts(n);
  if (n == 1) {
    pts[0] = lo;
    return pts;
  }
  if (log_spaced) {
    if (!(lo > 0) || !(hi > 0)) throw ConfigError("config-error", "log sweep needs lo, hi > 0");
    for (int i = 0; i < n; ++i) {
      pts[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    }
  } else {
    for (int i = 0; i < n; ++i) pts[i] = lo + (hi - lo) * i / (n - 1);
  }
  return pts;
}

std::string fmt17(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// ---- prepare ---------------------------------------------------------------

struct PrepareArgs {
  std::string code, target_file, out = "floq_run";
  std::int64_t haar_seed = -1;
  int dim = 0, sim_dim = 0, n_t = 64, n_k = 0;
  double k_f = 0.0, beta0 = 1.0, lambda = pipeline::kDefaultLambda, T = 1.0;
  double alpha = 2.3447, sigma = 0.35;
  int n_range = 8;
  bool skip_wigner = false;
};

int run_prepare(const PrepareArgs& a) {
  const int chosen = int(!a.code.empty()) + int(!a.target_file.empty()) + int(a.haar_seed >= 0);
  if (chosen != 1) {
    throw ConfigError("config-error", "choose exactly one of --code, --target-file, --haar-seed");
  }

  QuantumState target{FockSpace{2, a.lambda, -1}, Vec()};
  std::string target_kind;
  if (!a.code.empty()) {
    int dim = a.dim > 0 ? a.dim : 32;
    auto kind = parse_code_kind(a.code);
    auto code = build_code(kind, FockSpace{dim, a.lambda, -1}, a.alpha, a.sigma, a.n_range);
    target = code.zero_l;
    target_kind = "code:" + a.code;
  } else if (!a.target_file.empty()) {
    if (!fs::exists(a.target_file)) {
      throw ConfigError("target-not-found", "target file missing: " + a.target_file);
    }
    try {
      target = io::state_from_json(json::parse(io::read_text(a.target_file)));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("target-parse-error", e.what());
    }
    target_kind = "file:" + a.target_file;
  } else {
    if (a.dim < 2) throw ConfigError("config-error", "--haar-seed needs --dim >= 2");
    target = haar::sample_state(a.dim, FockSpace{a.dim, a.lambda, 0},
                                haar::mix_seed(std::uint64_t(a.haar_seed), 1));
    target_kind = "haar:" + std::to_string(a.haar_seed);
  }

  const int sim_dim = a.sim_dim > 0 ? a.sim_dim
                                    : (!a.code.empty() ? target.space.dim : target.space.dim + 8);
  if (sim_dim < target.space.dim) throw ConfigError("config-error", "--sim-dim below target dim");
  const int n_k = a.n_k > 0 ? a.n_k : (!a.code.empty() ? 50 : 40);
  const double k_f = a.k_f > 0 ? a.k_f : (!a.code.empty() ? 50.0 : 40.0);

  pipeline::PrepConfig pc{FockSpace{sim_dim, a.lambda, -1}, a.n_t, n_k, k_f, a.beta0, a.T};
  auto res = pipeline::prepare_state(target, pc);

  json config{{"command", "prepare"}, {"target", target_kind},   {"dim", target.space.dim},
              {"sim_dim", sim_dim},   {"N_t", a.n_t},            {"N_k", n_k},
              {"k_f", k_f},           {"beta0", a.beta0},        {"lambda", a.lambda},
              {"T", a.T},             {"alpha", a.alpha},        {"sigma", a.sigma},
              {"n_range", a.n_range}};
  auto out = prepare_out_dir(a.out);
  io::write_text((out / "manifest.json").string(), io::make_manifest(config).dump(2) + "\n");

  json summary{{"target", target_kind},
               {"fidelity", res.fidelity},
               {"infidelity", 1.0 - res.fidelity},
               {"near_branch_cut", res.near_branch_cut},
               {"gates", res.sequence.gates.size()},
               {"config", config}};
  io::write_text((out / "summary.json").string(), summary.dump(2) + "\n");
  io::write_text((out / "sequence.json").string(), io::sequence_to_json(res.sequence).dump() + "\n");
  io::write_grid_csv((out / "pulse_amplitude.csv").string(), res.pulse.grid, res.pulse.amplitude);
  io::write_grid_csv((out / "pulse_phase.csv").string(), res.pulse.grid, res.pulse.phase);
  io::write_amplitudes_csv((out / "target_amplitudes.csv").string(), target);
  io::write_amplitudes_csv((out / "prepared_amplitudes.csv").string(), res.prepared);
  if (!a.skip_wigner) {
    auto wt = fock::wigner(pipeline::embed_state(target, pc.sim_space));
    io::write_wigner_csv((out / "wigner_target.csv").string(), wt);
    io::write_wigner_sidecar((out / "wigner_target.meta.json").string(), wt, pc.sim_space);
    auto wp = fock::wigner(res.prepared);
    io::write_wigner_csv((out / "wigner_prepared.csv").string(), wp);
    io::write_wigner_sidecar((out / "wigner_prepared.meta.json").string(), wp, pc.sim_space);
  }
  std::cout << "fidelity " << fmt17(res.fidelity) << " (infidelity " << fmt17(1.0 - res.fidelity)
            << "), artifacts in " << out.string() << std::endl;
  return 0;
}

// ---- optimize --------------------------------------------------------------

struct OptimizeArgs {
  std::string code, gate, out = "floq_run";
  bool state_prep = false, delta_relative = false;
  double delta = 1.0, beta0 = 1.0, lambda = pipeline::kDefaultLambda, T = 1.0;
  int dim = 32, n_t = 64, n_k = 50;
  double k_f = 50.0;
  int budget = 60000, starts = 1, gate_samples = 0;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  double alpha = 2.3447, sigma = 0.35;
  int n_range = 8;
};

ope::OptimizationProblem gate_problem(const codes::CodeSpec& code, const Eigen::Matrix2cd& gate,
                                      const OptimizeArgs& a, double delta_abs) {
  auto uphys = synth::embed_logical_gate(code.space, code.embedding, gate);
  pipeline::PrepConfig pc{code.space, a.n_t, a.n_k, a.k_f, a.beta0, a.T};
  auto pulse = pipeline::pulse_for_unitary(uphys, pc);
  return ope::OptimizationProblem{ope::GateObjective{gate, code.embedding.q},
                                  std::move(pulse),
                                  code.space,
                                  delta_abs,
                                  a.beta0,
                                  a.T,
                                  a.budget,
                                  a.tol,
                                  a.starts,
                                  a.seed};
}

int run_optimize(const OptimizeArgs& a) {
  if (a.code.empty()) throw ConfigError("config-error", "--code is required");
  if (int(a.state_prep) + int(!a.gate.empty()) + int(a.gate_samples > 0) != 1) {
    throw ConfigError("config-error",
                      "choose exactly one of --state-prep, --gate, --gate-samples");
  }
  const double delta_abs = a.delta_relative ? a.delta * a.beta0 : a.delta;
  FockSpace space{a.dim, a.lambda, -1};
  auto code = build_code(parse_code_kind(a.code), space, a.alpha, a.sigma, a.n_range);

  json config{{"command", "optimize"},
              {"code", a.code},
              {"mode", a.state_prep ? "state-prep" : (a.gate_samples ? "gate-samples" : "gate")},
              {"gate", a.gate},
              {"gate_samples", a.gate_samples},
              {"delta", a.delta},
              {"delta_relative", a.delta_relative},
              {"dim", a.dim},
              {"N_t", a.n_t},
              {"N_k", a.n_k},
              {"k_f", a.k_f},
              {"beta0", a.beta0},
              {"lambda", a.lambda},
              {"budget", a.budget},
              {"tol", a.tol},
              {"starts", a.starts},
              {"seed", a.seed}};
  auto out = prepare_out_dir(a.out);
  io::write_text((out / "manifest.json").string(), io::make_manifest(config).dump(2) + "\n");

  if (a.gate_samples > 0) {
    // Violin export: random SU(2) targets, one OPE run each.
    std::ostringstream csv;
    csv << "index,final_infidelity,baseline_infidelity,converged\n";
    for (int i = 0; i < a.gate_samples; ++i) {
      auto g = synth::random_su2(haar::mix_seed(a.seed, std::uint64_t(i)));
      auto prob = gate_problem(code, g, a, delta_abs);
      double base = ope::loss(prob, RVec::Constant(a.n_t, a.beta0));
      auto r = ope::optimize(prob);
      csv << i << "," << fmt17(r.final_loss) << "," << fmt17(base) << ","
          << (r.converged ? 1 : 0) << "\n";
      std::cout << "gate sample " << i << ": infidelity " << fmt17(r.final_loss) << std::endl;
    }
    io::write_text((out / "violin.csv").string(), csv.str());
    return 0;
  }

  ope::OptimizationProblem prob =
      a.state_prep
          ? [&] {
              auto u = synth::householder_unitary(fock::vacuum_state(space), code.zero_l);
              pipeline::PrepConfig pc{space, a.n_t, a.n_k, a.k_f, a.beta0, a.T};
              auto pulse = pipeline::pulse_for_unitary(u, pc);
              return ope::OptimizationProblem{ope::StatePrepObjective{code.zero_l},
                                              std::move(pulse),
                                              space,
                                              delta_abs,
                                              a.beta0,
                                              a.T,
                                              a.budget,
                                              a.tol,
                                              a.starts,
                                              a.seed};
            }()
          : gate_problem(code, named_gate(a.gate, a.seed), a, delta_abs);

  double baseline = ope::loss(prob, RVec::Constant(a.n_t, a.beta0));
  auto result = ope::optimize(prob);

  json rj = io::optimization_result_to_json(result);
  rj["baseline_loss"] = baseline;
  rj["config"] = config;
  io::write_text((out / "result.json").string(), rj.dump(2) + "\n");
  io::write_loss_trace_csv((out / "loss_trace.csv").string(), result);

  // The optimized sequence as a concrete artifact.
  qlg::SequenceEngine eng(prob.space, prob.pulse, prob.T);
  io::write_text((out / "optimized_sequence.json").string(),
                 io::sequence_to_json(eng.to_sequence(result.beta_opt)).dump() + "\n");

  std::cout << "baseline " << fmt17(baseline) << " -> optimized " << fmt17(result.final_loss)
            << (result.converged ? " (converged)" : " (budget)") << ", artifacts in "
            << out.string() << std::endl;
  return 0;
}

// ---- haar ------------------------------------------------------------------

struct HaarArgs {
  int d = 4, n_t = 64, n_k = 40, samples = 200, headroom = 8, workers = 0;
  double k_f = 40.0, beta0 = 1.0, lambda = pipeline::kDefaultLambda;
  std::uint64_t seed = 1;
  std::string out = "floq_run";
};

int run_haar(const HaarArgs& a) {
  haar::BenchmarkConfig cfg;
  cfg.d = a.d;
  cfg.n_t = a.n_t;
  cfg.n_k = a.n_k;
  cfg.k_f = a.k_f;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.beta0 = a.beta0;
  cfg.lambda = a.lambda;
  cfg.headroom = a.headroom;
  cfg.workers = a.workers > 0 ? a.workers : default_workers();
  auto rep = haar::benchmark(cfg);

  json config{{"command", "haar"}, {"d", a.d},         {"N_t", a.n_t},
              {"N_k", a.n_k},      {"k_f", a.k_f},     {"samples", a.samples},
              {"seed", a.seed},    {"beta0", a.beta0}, {"lambda", a.lambda},
              {"headroom", a.headroom}};
  auto out = prepare_out_dir(a.out);
  io::write_text((out / "manifest.json").string(), io::make_manifest(config).dump(2) + "\n");
  json rj = io::haar_report_to_json(rep);
  rj["config"] = config;
  io::write_text((out / "report.json").string(), rj.dump(2) + "\n");
  io::write_histogram_csv((out / "histogram.csv").string(), rep);

  std::cout << "mean F_QLG " << fmt17(rep.mean_prep_fidelity) << ", mean F(ref) "
            << fmt17(rep.mean_fidelity_to_ref) << " (1/d = " << fmt17(1.0 / a.d) << "), KS "
            << fmt17(rep.ks_statistic) << ", failures " << rep.failures << std::endl;
  return 0;
}

// ---- noise -----------------------------------------------------------------

struct NoiseArgs {
  std::string code = "binomial", kappa_sweep, zeta_sweep, out = "floq_run";
  int seeds = 20, dim = 24, n_t = 64, n_k = 50, substeps = 2, budget = 40000, workers = 0;
  double k_f = 50.0, beta0 = 1.0, lambda = pipeline::kDefaultLambda, delta = 1.0;
  bool bare = false;
  std::uint64_t seed = 1;
};

int run_noise(const NoiseArgs& a) {
  if (a.kappa_sweep.empty() == a.zeta_sweep.empty()) {
    throw ConfigError("config-error", "choose exactly one of --kappa-sweep, --zeta-sweep");
  }
  FockSpace space{a.dim, a.lambda, -1};
  auto code = build_code(parse_code_kind(a.code), space, 2.3447, 0.35, 8);

  // opt-QLG envelope (or the bare beta0 one).
  auto u = synth::householder_unitary(fock::vacuum_state(space), code.zero_l);
  pipeline::PrepConfig pc{space, a.n_t, a.n_k, a.k_f, a.beta0, 1.0};
  auto pulse = pipeline::pulse_for_unitary(u, pc);
  ope::OptimizationProblem prob{ope::StatePrepObjective{code.zero_l},
                                pulse,
                                space,
                                a.delta,
                                a.beta0,
                                1.0,
                                a.budget,
                                1e-10,
                                1,
                                a.seed};
  RVec beta = RVec::Constant(a.n_t, a.beta0);
  if (!a.bare) beta = ope::optimize(prob).beta_opt;

  qlg::SequenceEngine eng(space, pulse, 1.0);
  auto seq = eng.to_sequence(beta);

  json config{{"command", "noise"},   {"code", a.code},     {"kappa_sweep", a.kappa_sweep},
              {"zeta_sweep", a.zeta_sweep}, {"seeds", a.seeds}, {"dim", a.dim},
              {"N_t", a.n_t},         {"N_k", a.n_k},       {"k_f", a.k_f},
              {"beta0", a.beta0},     {"lambda", a.lambda}, {"delta", a.delta},
              {"bare", a.bare},       {"budget", a.budget}, {"substeps", a.substeps},
              {"seed", a.seed}};
  auto out = prepare_out_dir(a.out);
  io::write_text((out / "manifest.json").string(), io::make_manifest(config).dump(2) + "\n");

  std::ostringstream csv;
  csv << (a.kappa_sweep.empty() ? "zeta" : "kappa") << ",mean_infidelity,std,n_samples,bound\n";
  Vec tgt = code.zero_l.amp;

  if (!a.kappa_sweep.empty()) {
    auto points = parse_sweep(a.kappa_sweep);
    for (double kappa : points) {
      noise::NoiseConfig nc;
      nc.kappa = kappa;
      nc.dt_substeps = a.substeps;
      auto rho = noise::lindblad_evolve(seq, fock::pure_density(fock::vacuum_state(space)), nc);
      double infid = 1.0 - tgt.dot(rho.rho * tgt).real();
      double bound = noise::coherent_bound(seq, fock::vacuum_state(space), kappa);
      csv << fmt17(kappa) << "," << fmt17(infid) << ",0,1," << fmt17(bound) << "\n";
      std::cout << "kappa " << fmt17(kappa) << ": infidelity " << fmt17(infid) << ", bound "
                << fmt17(1.0 - bound) << std::endl;
    }
  } else {
    auto points = parse_sweep(a.zeta_sweep);
    const int workers = a.workers > 0 ? a.workers : default_workers();
    for (double zeta : points) {
      std::vector<double> infid(a.seeds);
      parallel_for(a.seeds, workers, [&](int s) {
        RVec noisy = noise::noisy_envelope(beta, zeta, haar::mix_seed(a.seed, 1000 + s));
        Vec psi = eng.apply_vec(noisy, fock::vacuum_state(space).amp);
        infid[s] = 1.0 - std::norm(tgt.dot(psi));
      });
      double mean = 0.0, var = 0.0;
      for (double v : infid) mean += v;
      mean /= a.seeds;
      for (double v : infid) var += (v - mean) * (v - mean);
      double sd = a.seeds > 1 ? std::sqrt(var / (a.seeds - 1)) : 0.0;
      csv << fmt17(zeta) << "," << fmt17(mean) << "," << fmt17(sd) << "," << a.seeds << ",1\n";
      std::cout << "zeta " << fmt17(zeta) << ": mean infidelity " << fmt17(mean) << " +- "
                << fmt17(sd) << std::endl;
    }
  }
  io::write_text((out / "sweep.csv").string(), csv.str());
  return 0;
}

// ---- codes export ----------------------------------------------------------

struct CodesArgs {
  std::string code = "binomial", out = "floq_run";
  int dim = 32;
  double lambda = pipeline::kDefaultLambda, alpha = 2.3447, sigma = 0.35;
  int n_range = 8;
  bool skip_wigner = false;
};

int run_codes_export(const CodesArgs& a) {
  FockSpace space{a.dim, a.lambda, -1};
  auto code = build_code(parse_code_kind(a.code), space, a.alpha, a.sigma, a.n_range);

  json config{{"command", "codes-export"}, {"code", a.code},   {"dim", a.dim},
              {"lambda", a.lambda},        {"alpha", a.alpha}, {"sigma", a.sigma},
              {"n_range", a.n_range}};
  auto out = prepare_out_dir(a.out);
  io::write_text((out / "manifest.json").string(), io::make_manifest(config).dump(2) + "\n");
  io::write_amplitudes_csv((out / "zero_amplitudes.csv").string(), code.zero_l);
  io::write_amplitudes_csv((out / "one_amplitudes.csv").string(), code.one_l);

  auto [la, lad] = fock::ladder_ops(space);
  OperatorMatrix iden{space, Mat::Identity(a.dim, a.dim), true};
  auto kl = codes::kl_check(code, {iden, la});
  json klj{{"errors", {"I", "a"}},
           {"max_diag_deviation", kl.max_diag_dev},
           {"max_offdiagonal", kl.max_offdiag},
           {"overlap", std::abs(code.zero_l.amp.dot(code.one_l.amp))},
           {"config", config}};
  io::write_text((out / "kl.json").string(), klj.dump(2) + "\n");

  if (!a.skip_wigner) {
    auto w0 = fock::wigner(code.zero_l);
    io::write_wigner_csv((out / "wigner_zero.csv").string(), w0);
    io::write_wigner_sidecar((out / "wigner_zero.meta.json").string(), w0, space);
    auto w1 = fock::wigner(code.one_l);
    io::write_wigner_csv((out / "wigner_one.csv").string(), w1);
    io::write_wigner_sidecar((out / "wigner_one.meta.json").string(), w1, space);
  }
  std::cout << "codewords exported to " << out.string() << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"floq: single-period Floquet compilation of bosonic unitaries into quantum "
               "lattice gates"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override its values)");

  PrepareArgs pa;
  auto* prep = app.add_subcommand("prepare", "compile and simulate a state-preparation sequence");
  auto* o_code = prep->add_option("--code", pa.code, "target codeword: binomial|cat|gkp");
  auto* o_tfile = prep->add_option("--target-file", pa.target_file, "target state JSON");
  auto* o_hseed = prep->add_option("--haar-seed", pa.haar_seed, "Haar-random target seed");
  auto* o_dim = prep->add_option("--dim", pa.dim, "target dimension");
  auto* o_simdim = prep->add_option("--sim-dim", pa.sim_dim, "simulation cutoff");
  auto* o_nt = prep->add_option("--Nt", pa.n_t, "time slices (default 64)");
  auto* o_nk = prep->add_option("--Nk", pa.n_k, "wavenumber slices");
  auto* o_kf = prep->add_option("--kf", pa.k_f, "wavenumber cutoff");
  auto* o_beta0 = prep->add_option("--beta0", pa.beta0, "drive strength (default 1)");
  auto* o_lambda = prep->add_option("--lambda", pa.lambda, "dimensionless Planck constant");
  auto* o_T = prep->add_option("--T", pa.T, "duration in driving periods (default 1)");
  auto* o_alpha = prep->add_option("--alpha", pa.alpha, "cat amplitude");
  auto* o_sigma = prep->add_option("--sigma", pa.sigma, "GKP width");
  auto* o_nrange = prep->add_option("--n-range", pa.n_range, "GKP grid extent");
  auto* o_skipw = prep->add_flag("--skip-wigner", pa.skip_wigner, "skip Wigner CSV export");
  auto* o_out = prep->add_option("--out", pa.out, "output directory");

  OptimizeArgs oa;
  auto* opt = app.add_subcommand("optimize", "bound-constrained envelope optimization");
  auto* q_code = opt->add_option("--code", oa.code, "code: binomial|cat|gkp");
  auto* q_sp = opt->add_flag("--state-prep", oa.state_prep, "optimize codeword preparation");
  auto* q_gate = opt->add_option("--gate", oa.gate, "logical gate: H|S|T|random-SU2");
  auto* q_gs = opt->add_option("--gate-samples", oa.gate_samples,
                               "optimize N random SU(2) gates, export infidelities");
  auto* q_delta = opt->add_option("--delta", oa.delta, "envelope bound");
  auto* q_drel = opt->add_flag("--delta-relative", oa.delta_relative,
                               "interpret --delta as a fraction of beta0");
  auto* q_dim = opt->add_option("--dim", oa.dim, "Fock dimension (default 32)");
  auto* q_nt = opt->add_option("--Nt", oa.n_t, "time slices");
  auto* q_nk = opt->add_option("--Nk", oa.n_k, "wavenumber slices");
  auto* q_kf = opt->add_option("--kf", oa.k_f, "wavenumber cutoff");
  auto* q_beta0 = opt->add_option("--beta0", oa.beta0, "nominal strength");
  auto* q_lambda = opt->add_option("--lambda", oa.lambda, "Planck constant");
  auto* q_budget = opt->add_option("--budget", oa.budget, "max loss evaluations");
  auto* q_tol = opt->add_option("--tol", oa.tol, "projected-gradient tolerance");
  auto* q_starts = opt->add_option("--starts", oa.starts, "optimizer starts (first is beta0)");
  auto* q_seed = opt->add_option("--seed", oa.seed, "seed for restarts / random gates");
  auto* q_alpha = opt->add_option("--alpha", oa.alpha, "cat amplitude");
  auto* q_sigma = opt->add_option("--sigma", oa.sigma, "GKP width");
  auto* q_nrange = opt->add_option("--n-range", oa.n_range, "GKP grid extent");
  auto* q_out = opt->add_option("--out", oa.out, "output directory");

  HaarArgs ha;
  auto* hr = app.add_subcommand("haar", "Haar-random benchmark of the QLG pipeline");
  auto* h_d = hr->add_option("--d", ha.d, "subspace dimension");
  auto* h_nt = hr->add_option("--Nt", ha.n_t, "time slices");
  auto* h_nk = hr->add_option("--Nk", ha.n_k, "wavenumber slices");
  auto* h_kf = hr->add_option("--kf", ha.k_f, "wavenumber cutoff");
  auto* h_samples = hr->add_option("--samples", ha.samples, "sample count");
  auto* h_seed = hr->add_option("--seed", ha.seed, "RNG seed");
  auto* h_beta0 = hr->add_option("--beta0", ha.beta0, "drive strength");
  auto* h_lambda = hr->add_option("--lambda", ha.lambda, "Planck constant");
  auto* h_head = hr->add_option("--headroom", ha.headroom, "simulation levels above d");
  auto* h_workers = hr->add_option("--workers", ha.workers, "parallel sample workers");
  auto* h_out = hr->add_option("--out", ha.out, "output directory");

  NoiseArgs na;
  auto* ns = app.add_subcommand("noise", "single-photon-loss / amplitude-noise sweeps");
  auto* n_code = ns->add_option("--code", na.code, "code: binomial|cat|gkp");
  auto* n_ks = ns->add_option("--kappa-sweep", na.kappa_sweep, "lo:hi:logN or lo:hi:N");
  auto* n_zs = ns->add_option("--zeta-sweep", na.zeta_sweep, "lo:hi:N");
  auto* n_seeds = ns->add_option("--seeds", na.seeds, "noise realizations per point");
  auto* n_dim = ns->add_option("--dim", na.dim, "Fock dimension");
  auto* n_nt = ns->add_option("--Nt", na.n_t, "time slices");
  auto* n_nk = ns->add_option("--Nk", na.n_k, "wavenumber slices");
  auto* n_kf = ns->add_option("--kf", na.k_f, "wavenumber cutoff");
  auto* n_delta = ns->add_option("--delta", na.delta, "OPE bound");
  auto* n_bare = ns->add_flag("--bare", na.bare, "skip envelope optimization");
  auto* n_budget = ns->add_option("--budget", na.budget, "OPE budget");
  auto* n_sub = ns->add_option("--substeps", na.substeps, "RK4 substeps per segment");
  auto* n_lambda = ns->add_option("--lambda", na.lambda, "Planck constant");
  auto* n_seed = ns->add_option("--seed", na.seed, "base seed");
  auto* n_workers = ns->add_option("--workers", na.workers, "parallel workers");
  auto* n_out = ns->add_option("--out", na.out, "output directory");

  CodesArgs ca;
  auto* cd = app.add_subcommand("codes", "bosonic code utilities");
  cd->require_subcommand(1);
  auto* ce = cd->add_subcommand("export", "dump codeword amplitudes, Wigner grids, KL report");
  auto* c_code = ce->add_option("--code", ca.code, "binomial|cat|gkp");
  auto* c_dim = ce->add_option("--dim", ca.dim, "Fock dimension");
  auto* c_lambda = ce->add_option("--lambda", ca.lambda, "Planck constant");
  auto* c_alpha = ce->add_option("--alpha", ca.alpha, "cat amplitude");
  auto* c_sigma = ce->add_option("--sigma", ca.sigma, "GKP width");
  auto* c_nrange = ce->add_option("--n-range", ca.n_range, "GKP grid extent");
  auto* c_skipw = ce->add_flag("--skip-wigner", ca.skip_wigner, "skip Wigner CSV export");
  auto* c_out = ce->add_option("--out", ca.out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = load_config(config_path);
    if (prep->parsed()) {
      merge_opt(o_code, pa.code, cfg, "code");
      merge_opt(o_tfile, pa.target_file, cfg, "target_file");
      merge_opt(o_hseed, pa.haar_seed, cfg, "haar_seed");
      merge_opt(o_dim, pa.dim, cfg, "dim");
      merge_opt(o_simdim, pa.sim_dim, cfg, "sim_dim");
      merge_opt(o_nt, pa.n_t, cfg, "N_t");
      merge_opt(o_nk, pa.n_k, cfg, "N_k");
      merge_opt(o_kf, pa.k_f, cfg, "k_f");
      merge_opt(o_beta0, pa.beta0, cfg, "beta0");
      merge_opt(o_lambda, pa.lambda, cfg, "lambda");
      merge_opt(o_T, pa.T, cfg, "T");
      merge_opt(o_alpha, pa.alpha, cfg, "alpha");
      merge_opt(o_sigma, pa.sigma, cfg, "sigma");
      merge_opt(o_nrange, pa.n_range, cfg, "n_range");
      merge_opt(o_skipw, pa.skip_wigner, cfg, "skip_wigner");
      merge_opt(o_out, pa.out, cfg, "out");
      return run_prepare(pa);
    }
    if (opt->parsed()) {
      merge_opt(q_code, oa.code, cfg, "code");
      merge_opt(q_sp, oa.state_prep, cfg, "state_prep");
      merge_opt(q_gate, oa.gate, cfg, "gate");
      merge_opt(q_gs, oa.gate_samples, cfg, "gate_samples");
      merge_opt(q_delta, oa.delta, cfg, "delta");
      merge_opt(q_drel, oa.delta_relative, cfg, "delta_relative");
      merge_opt(q_dim, oa.dim, cfg, "dim");
      merge_opt(q_nt, oa.n_t, cfg, "N_t");
      merge_opt(q_nk, oa.n_k, cfg, "N_k");
      merge_opt(q_kf, oa.k_f, cfg, "k_f");
      merge_opt(q_beta0, oa.beta0, cfg, "beta0");
      merge_opt(q_lambda, oa.lambda, cfg, "lambda");
      merge_opt(q_budget, oa.budget, cfg, "budget");
      merge_opt(q_tol, oa.tol, cfg, "tol");
      merge_opt(q_starts, oa.starts, cfg, "starts");
      merge_opt(q_seed, oa.seed, cfg, "seed");
      merge_opt(q_alpha, oa.alpha, cfg, "alpha");
      merge_opt(q_sigma, oa.sigma, cfg, "sigma");
      merge_opt(q_nrange, oa.n_range, cfg, "n_range");
      merge_opt(q_out, oa.out, cfg, "out");
      return run_optimize(oa);
    }
    if (hr->parsed()) {
      merge_opt(h_d, ha.d, cfg, "d");
      merge_opt(h_nt, ha.n_t, cfg, "N_t");
      merge_opt(h_nk, ha.n_k, cfg, "N_k");
      merge_opt(h_kf, ha.k_f, cfg, "k_f");
      merge_opt(h_samples, ha.samples, cfg, "samples");
      merge_opt(h_seed, ha.seed, cfg, "seed");
      merge_opt(h_beta0, ha.beta0, cfg, "beta0");
      merge_opt(h_lambda, ha.lambda, cfg, "lambda");
      merge_opt(h_head, ha.headroom, cfg, "headroom");
      merge_opt(h_workers, ha.workers, cfg, "workers");
      merge_opt(h_out, ha.out, cfg, "out");
      return run_haar(ha);
    }
    if (ns->parsed()) {
      merge_opt(n_code, na.code, cfg, "code");
      merge_opt(n_ks, na.kappa_sweep, cfg, "kappa_sweep");
      merge_opt(n_zs, na.zeta_sweep, cfg, "zeta_sweep");
      merge_opt(n_seeds, na.seeds, cfg, "seeds");
      merge_opt(n_dim, na.dim, cfg, "dim");
      merge_opt(n_nt, na.n_t, cfg, "N_t");
      merge_opt(n_nk, na.n_k, cfg, "N_k");
      merge_opt(n_kf, na.k_f, cfg, "k_f");
      merge_opt(n_delta, na.delta, cfg, "delta");
      merge_opt(n_bare, na.bare, cfg, "bare");
      merge_opt(n_budget, na.budget, cfg, "budget");
      merge_opt(n_sub, na.substeps, cfg, "substeps");
      merge_opt(n_lambda, na.lambda, cfg, "lambda");
      merge_opt(n_seed, na.seed, cfg, "seed");
      merge_opt(n_workers, na.workers, cfg, "workers");
      merge_opt(n_out, na.out, cfg, "out");
      return run_noise(na);
    }
    if (ce->parsed()) {
      merge_opt(c_code, ca.code, cfg, "code");
      merge_opt(c_dim, ca.dim, cfg, "dim");
      merge_opt(c_lambda, ca.lambda, cfg, "lambda");
      merge_opt(c_alpha, ca.alpha, cfg, "alpha");
      merge_opt(c_sigma, ca.sigma, cfg, "sigma");
      merge_opt(c_nrange, ca.n_range, cfg, "n_range");
      merge_opt(c_skipw, ca.skip_wigner, cfg, "skip_wigner");
      merge_opt(c_out, ca.out, cfg, "out");
      return run_codes_export(ca);
    }
  } catch (const ConfigError& e) {
    emit_error(e.kind, e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    emit_error("config-error", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("computation-error", e.what());
    return 1;
  }
  return 0;
}
