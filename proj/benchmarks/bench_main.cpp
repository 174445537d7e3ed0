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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "noma/channel.hpp"
#include "noma/link.hpp"
#include "noma/montecarlo.hpp"

namespace {

void BM_SampleDraw(benchmark::State& state) {
  const noma::ScenarioConfig config;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        noma::sample_draw(config.geometry, config.path_loss, trial++, config.seed));
  }
}
BENCHMARK(BM_SampleDraw);

void BM_SampleDrawShadowed(benchmark::State& state) {
  noma::ScenarioConfig config;
  config.path_loss.shadowing_sigma_db = 8.0;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        noma::sample_draw(config.geometry, config.path_loss, trial++, config.seed));
  }
}
BENCHMARK(BM_SampleDrawShadowed);

void BM_EvaluateLink(benchmark::State& state) {
  noma::ScenarioConfig config;
  config.relay_enabled = true;
  const noma::LinkParams params = config.link_params();
  const auto scheme = state.range(0) == 0 ? noma::Scheme::fps : noma::Scheme::dps;
  const noma::ChannelDraw draw{1e-4, 6.25e-6, 1e-4, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(noma::evaluate_link(draw, scheme, 0.1, params));
  }
}
BENCHMARK(BM_EvaluateLink)->Arg(0)->Arg(1);

void BM_RunSweep(benchmark::State& state) {
  noma::ScenarioConfig config;
  config.n_trials = static_cast<std::uint64_t>(state.range(0));
  const noma::ExecutionOptions options{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(noma::run_sweep(config, options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          static_cast<std::int64_t>(config.power_levels_dbm.size()));
}
BENCHMARK(BM_RunSweep)->Args({10'000, 1})->Args({10'000, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
