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

namespace noma {

/// Distances in meters between the eNodeB, the near user and the far user.
struct Geometry {
  double d_near = 10.0;
  double d_far = 20.0;
  double d_relay = 10.0;  // near user to far user

  /// Near and far user on one ray from the eNodeB; relay hop is the gap.
  static Geometry collinear(double d_near, double d_far);

  void validate() const;
};

/// Log-distance path loss with optional log-normal shadowing.
struct PathLossParams {
  double exponent = 4.0;
  double reference_distance = 1.0;
  double shadowing_sigma_db = 0.0;

  void validate() const;
};

struct NoiseModel {
  double noise_power_w = 0.0;
  double bandwidth_hz = 10.0e9;

  /// kT noise floor integrated over the bandwidth.
  static NoiseModel thermal(double bandwidth_hz, double density_dbm_per_hz = -174.0);

  void validate() const;
};

/// One fading realization: linear squared gains |h|^2 for every link.
struct ChannelDraw {
  double g_near = 0.0;
  double g_far = 0.0;
  double g_relay = 0.0;
  std::uint64_t trial_index = 0;
};

/// Substream identifiers for the counter-based generator.
enum class LinkStream : std::uint32_t { near = 0, far = 1, relay = 2 };

/// Median (shadowing-free) mean gain (d0 / d)^eta. Throws std::invalid_argument
/// for non-finite distances or distances below the reference distance.
double mean_channel_gain(double distance, const PathLossParams& params);

/// Fading draw for one trial. Pure in (geometry, params, trial_index, seed).
ChannelDraw sample_draw(const Geometry& geometry, const PathLossParams& params,
                        std::uint64_t trial_index, std::uint64_t seed);

}  // namespace noma
