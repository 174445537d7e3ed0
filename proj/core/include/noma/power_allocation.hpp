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

namespace noma {

/// Superposition-coding weights. alpha_near = 1 - alpha_far, and the far
/// user never gets less than the near user.
struct PowerSplit {
  double alpha_near = 0.2;
  double alpha_far = 0.8;
};

/// Far-user rate target and the SINR it implies.
struct RateTarget {
  double target_rate = 1.0;  // bps/Hz
  double target_sinr = 1.0;  // linear, 2^rate - 1

  static RateTarget from_rate(double target_rate);
};

/// 2^rate - 1. Throws std::invalid_argument unless rate is finite and > 0.
double target_sinr(double target_rate);

/// Time-invariant split. Requires 0.5 < alpha_far <= 1.
PowerSplit fps_split(double alpha_far);

enum class DpsStatus {
  exact,       // far user lands exactly on the target rate
  floored,     // raw coefficient fell below 0.5; pinned to the equal split
  infeasible,  // target unreachable even with full power; split is (0, 1)
};

struct DpsAllocation {
  PowerSplit split;
  DpsStatus status = DpsStatus::exact;

  bool feasible() const noexcept { return status != DpsStatus::infeasible; }
};

/// Unclamped far coefficient S (gP + N) / (gP (1 + S)). +inf when gP == 0.
double dps_raw_alpha_far(double g_far, double transmit_power_w, double noise_power_w,
                         const RateTarget& target);

/// Channel-adaptive split giving the far user exactly the target rate.
///
/// A raw coefficient above 1 means the channel cannot carry the target even
/// with all power: the result is then clamped to (0, 1) and marked
/// infeasible. A raw coefficient below 0.5 (possible only when the target
/// SINR is below 1) would hand the near user more power than the far user,
/// so it is floored at 0.5.
DpsAllocation dps_split(double g_far, double transmit_power_w, double noise_power_w,
                        const RateTarget& target);

}  // namespace noma
