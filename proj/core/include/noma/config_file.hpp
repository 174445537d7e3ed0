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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "noma/montecarlo.hpp"

namespace noma {

/// Malformed or out-of-range scenario file. field() names the offending key
/// (empty for syntax errors that precede any key), line() is 1-based or 0.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, std::size_t line, const std::string& message);

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

// Scenario files are flat `key = value` text, one pair per line, with `#`
// starting a comment. Unset keys keep the ScenarioConfig defaults. Keys:
//
//   near_distance_m, far_distance_m, relay_distance_m (default far - near)
//   path_loss_exponent, reference_distance_m, shadowing_sigma_db
//   bandwidth_hz, noise_density_dbm_hz, noise_power_w (default: thermal)
//   target_rate, fps_alpha_far, harvest_fraction, harvest_efficiency
//   relay_enabled, half_rate_factor, blocking_attenuation
//   power_levels_dbm (comma separated), n_trials, seed
//   trace_power_dbm, trace_realizations

ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

/// Fully resolved config in the same syntax; parse_config of the result
/// reproduces the input exactly.
std::string format_config(const ScenarioConfig& config);

}  // namespace noma
