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

#include "noma/link.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace noma {

void SwiptConfig::validate() const {
  if (!(harvest_fraction >= 0.0 && harvest_fraction <= 1.0)) {
    throw std::invalid_argument("harvest_fraction must lie in [0, 1], got " +
                                std::to_string(harvest_fraction));
  }
  if (!(harvest_efficiency > 0.0 && harvest_efficiency <= 1.0)) {
    throw std::invalid_argument("harvest_efficiency must lie in (0, 1], got " +
                                std::to_string(harvest_efficiency));
  }
}

void RelayConfig::validate() const {
  if (half_rate_factor != 1.0 && half_rate_factor != 0.5) {
    throw std::invalid_argument("half_rate_factor must be 1 or 0.5, got " +
                                std::to_string(half_rate_factor));
  }
  if (!(blocking_attenuation > 0.0 && blocking_attenuation <= 1.0)) {
    throw std::invalid_argument("blocking_attenuation must lie in (0, 1], got " +
                                std::to_string(blocking_attenuation));
  }
}

std::string_view to_string(Scheme scheme) noexcept {
  return scheme == Scheme::fps ? "FPS" : "DPS";
}

bool meets_target(double rate, double target_rate) noexcept {
  return rate >= target_rate * (1.0 - kRateComparisonTolerance);
}

double rate_far_direct(double g_far, const PowerSplit& split, double transmit_power_w,
                       double noise_power_w) {
  const double received = g_far * transmit_power_w;
  const double sinr = received * split.alpha_far / (received * split.alpha_near + noise_power_w);
  return std::log2(1.0 + sinr);
}

double rate_near(double g_near, const PowerSplit& split, double transmit_power_w,
                 double noise_power_w, const SwiptConfig& swipt) {
  const double snr =
      swipt.decode_fraction() * g_near * transmit_power_w * split.alpha_near / noise_power_w;
  return std::log2(1.0 + snr);
}

double near_decode_far_rate(double g_near, const PowerSplit& split, double transmit_power_w,
                            double noise_power_w) {
  return rate_far_direct(g_near, split, transmit_power_w, noise_power_w);
}

double harvested_power(double g_near, double transmit_power_w, const SwiptConfig& swipt) {
  return transmit_power_w * g_near * swipt.harvest_efficiency * swipt.harvest_fraction;
}

double relay_rate(double harvested_power_w, double g_relay, double noise_power_w,
                  double half_rate_factor) {
  return half_rate_factor * std::log2(1.0 + harvested_power_w * g_relay / noise_power_w);
}

LinkReport evaluate_link(const ChannelDraw& draw, Scheme scheme, double transmit_power_w,
                         const LinkParams& params) {
  const double noise = params.noise.noise_power_w;
  const double g_far = draw.g_far * params.relay.blocking_attenuation;

  LinkReport report;
  if (scheme == Scheme::fps) {
    report.split = params.fps;
  } else {
    const DpsAllocation dps = dps_split(g_far, transmit_power_w, noise, params.target);
    report.split = dps.split;
    report.dps_feasible = dps.feasible();
  }

  report.rate_near = rate_near(draw.g_near, report.split, transmit_power_w, noise, params.swipt);
  report.rate_far_direct = rate_far_direct(g_far, report.split, transmit_power_w, noise);
  report.harvested_power_w = harvested_power(draw.g_near, transmit_power_w, params.swipt);
  report.rate_far_effective = report.rate_far_direct;

  if (params.relay.enabled) {
    const bool decodable = meets_target(
        near_decode_far_rate(draw.g_near, report.split, transmit_power_w, noise),
        params.target.target_rate);
    if (decodable) {
      report.relay_rate = relay_rate(report.harvested_power_w, draw.g_relay, noise,
                                     params.relay.half_rate_factor);
      if (report.relay_rate > report.rate_far_direct) {
        report.rate_far_effective = report.relay_rate;
        report.relay_used = true;
      }
    }
  }

  report.outage_near = !meets_target(report.rate_near, params.target.target_rate);
  report.outage_far = !meets_target(report.rate_far_effective, params.target.target_rate);
  return report;
}

}  // namespace noma
