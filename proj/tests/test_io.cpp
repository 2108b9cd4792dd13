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

#include <cstdio>
#include <random>

#include "doctest.h"
#include "floq/codes.hpp"

using namespace floq;
using namespace floq::io;

namespace {

ncft::DrivePulse random_pulse(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ncft::DrivePulse p;
  p.grid = ncft::make_grid(12.0, 6, 10);
  p.amplitude = RMat::NullaryExpr(6, 10, [&]() { return u(rng); });
  p.phase = RMat::NullaryExpr(6, 10, [&]() { return kPi * (2 * u(rng) - 1); });
  p.envelope = RVec::NullaryExpr(10, [&]() { return 0.5 + u(rng); });
  p.beta0 = 1.0;
  p.lambda = 0.1;
  return p;
}

}  // namespace

TEST_CASE("pulse JSON round trip is exact") {
  auto p = random_pulse(3);
  auto j = pulse_to_json(p);
  auto q = pulse_from_json(json::parse(j.dump()));
  CHECK((p.amplitude - q.amplitude).cwiseAbs().maxCoeff() == 0.0);
  CHECK((p.phase - q.phase).cwiseAbs().maxCoeff() == 0.0);
  CHECK((p.envelope - q.envelope).cwiseAbs().maxCoeff() == 0.0);
  CHECK(p.grid.k == q.grid.k);
  CHECK(p.grid.tau == q.grid.tau);
}

TEST_CASE("sequence JSON round trip is exact") {
  FockSpace s{12, 0.1, 0};
  auto seq = qlg::compile(s, random_pulse(9));
  auto j = sequence_to_json(seq);
  auto r = sequence_from_json(json::parse(j.dump()));
  REQUIRE(r.gates.size() == seq.gates.size());
  for (size_t i = 0; i < seq.gates.size(); ++i) {
    CHECK(r.gates[i].theta == seq.gates[i].theta);
    CHECK(r.gates[i].gamma == seq.gates[i].gamma);
    CHECK(r.gates[i].k == seq.gates[i].k);
  }
  CHECK(r.meta.N_t == seq.meta.N_t);
  CHECK(compatible(r.space, seq.space));
}

TEST_CASE("state and unitary JSON round trips") {
  FockSpace s{10, 1.0, 0};
  std::mt19937_64 rng(17);
  std::normal_distribution<double> nd;
  Vec v(10);
  for (int i = 0; i < 10; ++i) v(i) = cxd(nd(rng), nd(rng));
  v /= v.norm();
  auto psi = fock::make_state(s, v);
  auto back = state_from_json(json::parse(state_to_json(psi).dump()));
  CHECK((back.amp - psi.amp).cwiseAbs().maxCoeff() == 0.0);

  auto u = synth::householder_unitary(fock::vacuum_state(s), psi);
  auto ub = unitary_from_json(json::parse(unitary_to_json(u).dump()));
  CHECK((ub.mat - u.mat).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("manifest hashes configs stably; timestamps only in manifest") {
  json cfg{{"a", 1}, {"b", 2.5}};
  auto m1 = make_manifest(cfg);
  auto m2 = make_manifest(cfg);
  CHECK(m1.at("config_hash") == m2.at("config_hash"));
  json cfg2{{"a", 1}, {"b", 2.6}};
  CHECK(make_manifest(cfg2).at("config_hash") != m1.at("config_hash"));
  CHECK(m1.contains("generated_at"));
}

TEST_CASE("CSV writers produce parseable artifacts") {
  FockSpace s{16, 1.0, 8};
  auto code = codes::binomial_code(s);
  std::string dir = "/tmp/floq_io_test";
  std::remove((dir + "_amp.csv").c_str());
  write_amplitudes_csv(dir + "_amp.csv", code.zero_l);
  auto text = read_text(dir + "_amp.csv");
  CHECK(text.rfind("n,re,im,prob", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 17);  // header + 16 rows

  fock::WignerOptions opt;
  opt.nx = opt.np = 21;
  auto g = fock::wigner(code.zero_l, opt);
  write_wigner_csv(dir + "_wig.csv", g);
  write_wigner_sidecar(dir + "_wig.meta.json", g, s);
  auto side = json::parse(read_text(dir + "_wig.meta.json"));
  CHECK(side.at("nx").get<int>() == 21);

  auto pulse = random_pulse(5);
  write_grid_csv(dir + "_a.csv", pulse.grid, pulse.amplitude);
  auto csv = read_text(dir + "_a.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 k-rows
}
