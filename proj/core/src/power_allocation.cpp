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

#include "noma/power_allocation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace noma {

double target_sinr(double target_rate) {
  if (!std::isfinite(target_rate) || target_rate <= 0.0) {
    throw std::invalid_argument("target_rate must be finite and > 0, got " +
                                std::to_string(target_rate));
  }
  return std::exp2(target_rate) - 1.0;
}

RateTarget RateTarget::from_rate(double target_rate) {
  return RateTarget{target_rate, noma::target_sinr(target_rate)};
}

PowerSplit fps_split(double alpha_far) {
  if (!(alpha_far > 0.5 && alpha_far <= 1.0)) {
    throw std::invalid_argument(
        "fps_alpha_far must lie in (0.5, 1] so the far user gets more power than the near "
        "user, got " +
        std::to_string(alpha_far));
  }
  // 1 - a is exact for a in [0.5, 1], so the pair sums to exactly 1.
  return PowerSplit{1.0 - alpha_far, alpha_far};
}

double dps_raw_alpha_far(double g_far, double transmit_power_w, double noise_power_w,
                         const RateTarget& target) {
  const double received = g_far * transmit_power_w;
  if (!(received > 0.0)) return std::numeric_limits<double>::infinity();
  const double s = target.target_sinr;
  return s * (received + noise_power_w) / (received * (1.0 + s));
}

DpsAllocation dps_split(double g_far, double transmit_power_w, double noise_power_w,
                        const RateTarget& target) {
  const double raw = dps_raw_alpha_far(g_far, transmit_power_w, noise_power_w, target);
  if (raw > 1.0) return {PowerSplit{0.0, 1.0}, DpsStatus::infeasible};
  if (raw < 0.5) return {PowerSplit{0.5, 0.5}, DpsStatus::floored};
  return {PowerSplit{1.0 - raw, raw}, DpsStatus::exact};
}

}  // namespace noma
