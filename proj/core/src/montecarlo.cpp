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

#include "noma/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace noma {
namespace {

constexpr std::uint64_t kBlockTrials = 4096;

// Two schemes x two user slots. Slot meaning depends on the run:
// (near, far) for sweeps, (far_relay, far_no_relay) for the relay comparison.
struct Tally {
  std::array<double, 4> se_sum{};
  std::array<std::uint64_t, 4> outages{};
  std::uint64_t dps_infeasible = 0;

  void add(std::size_t slot, double rate, bool outage) {
    se_sum[slot] += rate;
    outages[slot] += outage ? 1 : 0;
  }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < se_sum.size(); ++i) {
      se_sum[i] += other.se_sum[i];
      outages[i] += other.outages[i];
    }
    dps_infeasible += other.dps_infeasible;
  }
};

constexpr std::size_t slot(Scheme scheme, std::size_t user_slot) {
  return (scheme == Scheme::fps ? 0 : 2) + user_slot;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

using BlockFn = std::function<Tally(double power_w, std::uint64_t begin, std::uint64_t end)>;

// Runs every (power level, block) task and folds block tallies in index
// order, so the floating-point sums do not depend on the worker count.
std::vector<Tally> tally_levels(const ScenarioConfig& config, const BlockFn& block_fn,
                                ExecutionOptions options) {
  const std::uint64_t n_blocks = (config.n_trials + kBlockTrials - 1) / kBlockTrials;
  const std::size_t n_levels = config.power_levels_dbm.size();
  const std::size_t n_tasks = n_levels * n_blocks;
  std::vector<Tally> partial(n_tasks);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < n_tasks; task = next++) {
      const std::size_t level = task / n_blocks;
      const std::uint64_t block = task % n_blocks;
      const std::uint64_t begin = block * kBlockTrials;
      const std::uint64_t end = std::min(config.n_trials, begin + kBlockTrials);
      partial[task] = block_fn(dbm_to_watts(config.power_levels_dbm[level]), begin, end);
    }
  };

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_workers(options.workers), n_tasks));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  }

  std::vector<Tally> levels(n_levels);
  for (std::size_t task = 0; task < n_tasks; ++task) levels[task / n_blocks].merge(partial[task]);
  return levels;
}

SweepResult summarize(const ScenarioConfig& config, const std::vector<Tally>& levels,
                      std::array<User, 2> users) {
  SweepResult result;
  result.n_trials = config.n_trials;
  result.seed = config.seed;
  const double n = static_cast<double>(config.n_trials);
  for (std::size_t level = 0; level < levels.size(); ++level) {
    const Tally& t = levels[level];
    for (Scheme scheme : {Scheme::fps, Scheme::dps}) {
      for (std::size_t u = 0; u < users.size(); ++u) {
        const std::size_t s = slot(scheme, u);
        SweepEntry e;
        e.power_dbm = config.power_levels_dbm[level];
        e.scheme = scheme;
        e.user = users[u];
        e.avg_spectral_efficiency = t.se_sum[s] / n;
        e.outage_probability = static_cast<double>(t.outages[s]) / n;
        e.dps_infeasible_fraction =
            scheme == Scheme::dps ? static_cast<double>(t.dps_infeasible) / n : 0.0;
        result.entries.push_back(e);
      }
    }
  }
  return result;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void ScenarioConfig::validate() const {
  geometry.validate();
  path_loss.validate();
  noise.validate();
  require(std::isfinite(target.target_rate) && target.target_rate > 0.0,
          "target_rate must be finite and > 0");
  require(target.target_sinr == noma::target_sinr(target.target_rate),
          "target_sinr must equal 2^target_rate - 1");
  fps_split(fps_alpha_far);
  swipt.validate();
  link_params().relay.validate();
  for (double d : {geometry.d_near, geometry.d_far, geometry.d_relay}) {
    require(d >= path_loss.reference_distance,
            "all distances must be >= reference_distance_m (" +
                std::to_string(path_loss.reference_distance) + ")");
  }
  require(!power_levels_dbm.empty(), "power_levels_dbm must list at least one level");
  for (std::size_t i = 0; i < power_levels_dbm.size(); ++i) {
    require(std::isfinite(power_levels_dbm[i]), "power_levels_dbm entries must be finite");
    require(i == 0 || power_levels_dbm[i] > power_levels_dbm[i - 1],
            "power_levels_dbm must be strictly increasing");
  }
  require(n_trials >= 1, "n_trials must be >= 1");
  require(std::isfinite(trace_power_dbm), "trace_power_dbm must be finite");
  require(trace_realizations >= 1, "trace_realizations must be >= 1");
}

LinkParams ScenarioConfig::link_params() const {
  LinkParams p;
  p.noise = noise;
  p.target = target;
  p.fps = PowerSplit{1.0 - fps_alpha_far, fps_alpha_far};
  p.swipt = swipt;
  p.relay = RelayConfig{relay_enabled, half_rate_factor, blocking_attenuation};
  return p;
}

double dbm_to_watts(double power_dbm) { return std::pow(10.0, (power_dbm - 30.0) / 10.0); }

std::string_view to_string(User user) noexcept {
  switch (user) {
    case User::near:
      return "near";
    case User::far:
      return "far";
    case User::far_relay:
      return "far_relay";
    case User::far_no_relay:
      return "far_no_relay";
  }
  return "unknown";
}

std::optional<SweepEntry> SweepResult::find(double power_dbm, Scheme scheme, User user) const {
  for (const SweepEntry& e : entries) {
    if (e.power_dbm == power_dbm && e.scheme == scheme && e.user == user) return e;
  }
  return std::nullopt;
}

TrialReports run_trial(const ScenarioConfig& config, double power_dbm, std::uint64_t trial_index) {
  const LinkParams params = config.link_params();
  TrialReports out;
  out.transmit_power_w = dbm_to_watts(power_dbm);
  out.draw = sample_draw(config.geometry, config.path_loss, trial_index, config.seed);
  out.fps = evaluate_link(out.draw, Scheme::fps, out.transmit_power_w, params);
  out.dps = evaluate_link(out.draw, Scheme::dps, out.transmit_power_w, params);
  return out;
}

SweepResult run_sweep(const ScenarioConfig& config, ExecutionOptions options) {
  config.validate();
  const LinkParams params = config.link_params();
  auto block = [&](double power_w, std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t i = begin; i < end; ++i) {
      const ChannelDraw draw = sample_draw(config.geometry, config.path_loss, i, config.seed);
      for (Scheme scheme : {Scheme::fps, Scheme::dps}) {
        const LinkReport r = evaluate_link(draw, scheme, power_w, params);
        t.add(slot(scheme, 0), r.rate_near, r.outage_near);
        t.add(slot(scheme, 1), r.rate_far_effective, r.outage_far);
        if (!r.dps_feasible) ++t.dps_infeasible;
      }
    }
    return t;
  };
  return summarize(config, tally_levels(config, block, options), {User::near, User::far});
}

SweepResult run_relay_comparison(const ScenarioConfig& config, ExecutionOptions options) {
  config.validate();
  LinkParams with_relay = config.link_params();
  with_relay.relay.enabled = true;
  LinkParams without_relay = with_relay;
  without_relay.relay.enabled = false;

  auto block = [&](double power_w, std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t i = begin; i < end; ++i) {
      const ChannelDraw draw = sample_draw(config.geometry, config.path_loss, i, config.seed);
      for (Scheme scheme : {Scheme::fps, Scheme::dps}) {
        const LinkReport on = evaluate_link(draw, scheme, power_w, with_relay);
        const LinkReport off = evaluate_link(draw, scheme, power_w, without_relay);
        t.add(slot(scheme, 0), on.rate_far_effective, on.outage_far);
        t.add(slot(scheme, 1), off.rate_far_effective, off.outage_far);
        if (!on.dps_feasible) ++t.dps_infeasible;
      }
    }
    return t;
  };
  return summarize(config, tally_levels(config, block, options),
                   {User::far_relay, User::far_no_relay});
}

TraceResult run_trace(const ScenarioConfig& config, double power_dbm,
                      std::uint64_t n_realizations) {
  config.validate();
  require(n_realizations >= 1, "n_realizations must be >= 1");
  require(std::isfinite(power_dbm), "trace power must be finite");
  TraceResult result;
  result.power_dbm = power_dbm;
  result.reference_rate = config.target.target_rate;
  result.entries.reserve(n_realizations * 4);
  for (std::uint64_t i = 0; i < n_realizations; ++i) {
    const TrialReports t = run_trial(config, power_dbm, i);
    for (const auto& [scheme, report] : {std::pair{Scheme::fps, t.fps}, {Scheme::dps, t.dps}}) {
      result.entries.push_back({i, scheme, User::near, report.rate_near, report.dps_feasible});
      result.entries.push_back(
          {i, scheme, User::far, report.rate_far_effective, report.dps_feasible});
    }
  }
  return result;
}

}  // namespace noma
