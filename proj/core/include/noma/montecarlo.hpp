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
#include <optional>
#include <vector>

#include "noma/channel.hpp"
#include "noma/link.hpp"
#include "noma/power_allocation.hpp"

namespace noma {

/// Full simulation setup. Defaults reproduce the reference two-user cell:
/// 10 m / 20 m users, eta = 4, 1 bps/Hz target, (0.2, 0.8) fixed split,
/// omega = 0.7, 0..30 dBm in 5 dB steps.
struct ScenarioConfig {
  Geometry geometry = Geometry::collinear(10.0, 20.0);
  PathLossParams path_loss;
  NoiseModel noise = NoiseModel::thermal(10.0e9);
  RateTarget target = RateTarget::from_rate(1.0);
  double fps_alpha_far = 0.8;
  SwiptConfig swipt;
  bool relay_enabled = false;
  double half_rate_factor = 1.0;
  double blocking_attenuation = 1.0;
  std::vector<double> power_levels_dbm = {0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
  std::uint64_t n_trials = 100'000;
  std::uint64_t seed = 20240601;
  double trace_power_dbm = 0.0;
  std::uint64_t trace_realizations = 500;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  LinkParams link_params() const;
};

/// 10^((dBm - 30) / 10).
double dbm_to_watts(double power_dbm);

enum class User { near, far, far_relay, far_no_relay };

std::string_view to_string(User user) noexcept;

struct TrialReports {
  double transmit_power_w = 0.0;
  ChannelDraw draw;
  LinkReport fps;
  LinkReport dps;
};

/// One realization evaluated under both schemes on the same draw.
TrialReports run_trial(const ScenarioConfig& config, double power_dbm, std::uint64_t trial_index);

struct ExecutionOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct SweepEntry {
  double power_dbm = 0.0;
  Scheme scheme = Scheme::fps;
  User user = User::near;
  double avg_spectral_efficiency = 0.0;
  double outage_probability = 0.0;
  double dps_infeasible_fraction = 0.0;
};

struct SweepResult {
  std::vector<SweepEntry> entries;  // power-major, then scheme, then user
  std::uint64_t n_trials = 0;
  std::uint64_t seed = 0;

  std::optional<SweepEntry> find(double power_dbm, Scheme scheme, User user) const;
};

/// Averages over config.n_trials trials at every configured power level.
/// Users are near and far; the far user follows config.relay_enabled.
SweepResult run_sweep(const ScenarioConfig& config, ExecutionOptions options = {});

/// Far-user outage with and without cooperative relaying on common draws.
/// Users are far_relay and far_no_relay.
SweepResult run_relay_comparison(const ScenarioConfig& config, ExecutionOptions options = {});

struct TraceEntry {
  std::uint64_t realization = 0;
  Scheme scheme = Scheme::fps;
  User user = User::near;
  double spectral_efficiency = 0.0;
  bool dps_feasible = true;
};

/// Per-realization rates at one power. Realization i uses trial index i, so
/// sample_draw(config.geometry, config.path_loss, i, config.seed) recovers
/// its channel.
struct TraceResult {
  double power_dbm = 0.0;
  double reference_rate = 0.0;
  std::vector<TraceEntry> entries;  // realization-major, then scheme, then user
};

TraceResult run_trace(const ScenarioConfig& config, double power_dbm,
                      std::uint64_t n_realizations);

}  // namespace noma
