// Copyright 2026 The noma-swipt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noma/montecarlo.hpp"

namespace noma {

enum class ScenarioName { fig2, fig3, fig4, trace_near, trace_far, all };

/// Accepts fig2, fig3, fig4, trace-near, trace-far, all.
ScenarioName parse_scenario_name(std::string_view name);
std::string_view to_string(ScenarioName name) noexcept;

// CSV layout:
//   sweep: scenario,power_dbm,scheme,user,avg_se_bps_hz,outage_prob,dps_infeasible_frac,n_trials,seed
//   trace: scenario,realization,scheme,user,se_bps_hz,reference_rate
// Reals use 9 significant digits; every row ends in '\n'.
inline constexpr std::string_view kSweepCsvHeader =
    "scenario,power_dbm,scheme,user,avg_se_bps_hz,outage_prob,dps_infeasible_frac,n_trials,seed";
inline constexpr std::string_view kTraceCsvHeader =
    "scenario,realization,scheme,user,se_bps_hz,reference_rate";

std::string format_real(double value);

std::string format_sweep_csv(std::string_view scenario, const SweepResult& result);

/// Only rows for `user` are emitted.
std::string format_trace_csv(std::string_view scenario, const TraceResult& result, User user);

std::string sha256_hex(std::string_view bytes);

std::string_view tool_version() noexcept;

struct OutputFile {
  std::string name;
  std::string sha256;
  std::uint64_t bytes = 0;
};

struct RunManifest {
  std::string scenario;
  std::string tool_version;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::string config_snapshot;  // format_config output
  std::vector<OutputFile> files;
  std::vector<std::pair<std::string, std::string>> observations;
  double duration_s = 0.0;
};

/// key = value text. Config keys carry a `config.` prefix.
std::string format_manifest(const RunManifest& manifest);

inline constexpr std::string_view kManifestFileName = "manifest.txt";

/// Runs one named scenario (or all five), writes its CSVs and manifest.txt
/// into out_dir (created if missing) and returns the manifest. Throws
/// std::runtime_error on I/O failure.
RunManifest run_scenario(ScenarioName name, const ScenarioConfig& config,
                         const std::filesystem::path& out_dir, ExecutionOptions options = {});

}  // namespace noma
