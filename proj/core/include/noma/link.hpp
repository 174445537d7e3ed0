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

#include <string_view>

#include "noma/channel.hpp"
#include "noma/power_allocation.hpp"

namespace noma {

/// Power-splitting SWIPT at the near user: a fraction omega of the received
/// power is harvested, the remaining 1 - omega is decoded.
struct SwiptConfig {
  double harvest_fraction = 0.7;    // omega
  double harvest_efficiency = 0.7;  // zeta

  double decode_fraction() const noexcept { return 1.0 - harvest_fraction; }

  void validate() const;
};

enum class Scheme { fps, dps };

std::string_view to_string(Scheme scheme) noexcept;

struct RelayConfig {
  bool enabled = false;
  double half_rate_factor = 1.0;      // 1 or 1/2
  double blocking_attenuation = 1.0;  // power factor on the direct far link, (0, 1]

  void validate() const;
};

/// Everything a single link evaluation needs besides the draw and the power.
struct LinkParams {
  NoiseModel noise;
  RateTarget target;
  PowerSplit fps;
  SwiptConfig swipt;
  RelayConfig relay;
};

struct LinkReport {
  double rate_near = 0.0;
  double rate_far_direct = 0.0;
  double rate_far_effective = 0.0;
  double relay_rate = 0.0;
  double harvested_power_w = 0.0;
  PowerSplit split;
  bool outage_near = false;
  bool outage_far = false;
  bool dps_feasible = true;
  bool relay_used = false;
};

/// Relative slack when comparing a rate against the target. DPS places the
/// far user on the target by construction, and the closed-form round trip
/// through log2 is only accurate to a few ulps.
inline constexpr double kRateComparisonTolerance = 1e-12;

/// rate >= target, up to kRateComparisonTolerance.
bool meets_target(double rate, double target_rate) noexcept;

/// Far user, treating the near user's layer as noise.
double rate_far_direct(double g_far, const PowerSplit& split, double transmit_power_w,
                       double noise_power_w);

/// Near user after perfect SIC, decoding only the 1 - omega share of the signal.
double rate_near(double g_near, const PowerSplit& split, double transmit_power_w,
                 double noise_power_w, const SwiptConfig& swipt);

/// Rate at which the near user can decode the far user's layer (SIC first stage).
double near_decode_far_rate(double g_near, const PowerSplit& split, double transmit_power_w,
                            double noise_power_w);

double harvested_power(double g_near, double transmit_power_w, const SwiptConfig& swipt);

/// Near-to-far forwarding rate using only the harvested power.
double relay_rate(double harvested_power_w, double g_relay, double noise_power_w,
                  double half_rate_factor = 1.0);

/// Full per-realization evaluation under one allocation scheme.
///
/// The direct far link sees g_far scaled by the blocking attenuation. With
/// relaying enabled, the far user takes the better of the direct and relayed
/// rates, but the relay only counts when the near user could decode the far
/// layer at the target rate (decode-and-forward).
LinkReport evaluate_link(const ChannelDraw& draw, Scheme scheme, double transmit_power_w,
                         const LinkParams& params);

}  // namespace noma
