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

#ifndef FLOQ_IO_HPP
#define FLOQ_IO_HPP

#include <string>

#include "floq/fock.hpp"
#include "floq/haar.hpp"
#include "floq/ncft.hpp"
#include "floq/ope.hpp"
#include "floq/qlg.hpp"
#include "floq/synth.hpp"
#include "floq/types.hpp"
#include "json.hpp"

namespace floq::io {

// Stable key order keeps artifacts byte-identical for identical configs.
using json = nlohmann::ordered_json;

// ---- JSON round trips --------------------------------------------------

json space_to_json(const FockSpace& s);
FockSpace space_from_json(const json& j);

json state_to_json(const QuantumState& psi);
QuantumState state_from_json(const json& j);

json matrix_to_json(const Mat& m);  // entries as [re, im]
Mat matrix_from_json(const json& j);

json pulse_to_json(const ncft::DrivePulse& p);
ncft::DrivePulse pulse_from_json(const json& j);

json sequence_to_json(const qlg::GateSequence& s);
qlg::GateSequence sequence_from_json(const json& j);

json unitary_to_json(const synth::TargetUnitary& u);
synth::TargetUnitary unitary_from_json(const json& j);

json haar_report_to_json(const haar::HaarBenchmarkReport& r);
json optimization_result_to_json(const ope::OptimizationResult& r);

// ---- CSV artifacts -------------------------------------------------------

/// Wigner grid as row-major CSV (first row: p axis; first column: x axis)
/// plus a JSON metadata sidecar describing axes and normalization.
void write_wigner_csv(const std::string& path, const fock::WignerGrid& g);
void write_wigner_sidecar(const std::string& path, const fock::WignerGrid& g,
                          const FockSpace& space);

/// Heatmap CSV of a (k, tau) array: header row carries tau values, first
/// column carries k values.
void write_grid_csv(const std::string& path, const ncft::NcftGrid& grid, const RMat& values);

void write_loss_trace_csv(const std::string& path, const ope::OptimizationResult& r);

void write_histogram_csv(const std::string& path, const haar::HaarBenchmarkReport& r);

void write_amplitudes_csv(const std::string& path, const QuantumState& psi);

// ---- files / manifest ------------------------------------------------------

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

std::uint64_t fnv1a(const std::string& data);

/// Run manifest: config hash, tool version, timestamp. The timestamp lives
/// only here so every other artifact is a pure function of (config, seeds).
json make_manifest(const json& config);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace floq::io

#endif  // FLOQ_IO_HPP
