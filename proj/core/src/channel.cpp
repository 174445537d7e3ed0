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

#include "noma/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "noma/rng.hpp"

namespace noma {
namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0, got " +
                                std::to_string(value));
  }
}

double fading_gain(double median, double sigma_db, std::uint64_t seed, std::uint64_t trial,
                   LinkStream link) {
  const auto stream = static_cast<std::uint32_t>(link);
  double mean = median;
  if (sigma_db > 0.0) {
    mean *= std::pow(10.0, sigma_db * rng::standard_normal(seed, trial, stream) / 10.0);
  }
  return mean * rng::standard_exponential(seed, trial, stream);
}

}  // namespace

Geometry Geometry::collinear(double d_near, double d_far) {
  Geometry g{d_near, d_far, d_far - d_near};
  g.validate();
  return g;
}

void Geometry::validate() const {
  require_positive(d_near, "near_distance_m");
  require_positive(d_far, "far_distance_m");
  require_positive(d_relay, "relay_distance_m");
}

void PathLossParams::validate() const {
  require_positive(exponent, "path_loss_exponent");
  require_positive(reference_distance, "reference_distance_m");
  if (!std::isfinite(shadowing_sigma_db) || shadowing_sigma_db < 0.0) {
    throw std::invalid_argument("shadowing_sigma_db must be finite and >= 0, got " +
                                std::to_string(shadowing_sigma_db));
  }
}

NoiseModel NoiseModel::thermal(double bandwidth_hz, double density_dbm_per_hz) {
  require_positive(bandwidth_hz, "bandwidth_hz");
  const double dbm = density_dbm_per_hz + 10.0 * std::log10(bandwidth_hz);
  return NoiseModel{std::pow(10.0, (dbm - 30.0) / 10.0), bandwidth_hz};
}

void NoiseModel::validate() const {
  require_positive(noise_power_w, "noise_power_w");
  require_positive(bandwidth_hz, "bandwidth_hz");
}

double mean_channel_gain(double distance, const PathLossParams& params) {
  require_positive(distance, "distance");
  if (distance < params.reference_distance) {
    throw std::invalid_argument("distance " + std::to_string(distance) +
                                " m is inside the reference distance " +
                                std::to_string(params.reference_distance) + " m");
  }
  return std::pow(params.reference_distance / distance, params.exponent);
}

ChannelDraw sample_draw(const Geometry& geometry, const PathLossParams& params,
                        std::uint64_t trial_index, std::uint64_t seed) {
  const double sigma = params.shadowing_sigma_db;
  ChannelDraw draw;
  draw.trial_index = trial_index;
  draw.g_near = fading_gain(mean_channel_gain(geometry.d_near, params), sigma, seed, trial_index,
                            LinkStream::near);
  draw.g_far = fading_gain(mean_channel_gain(geometry.d_far, params), sigma, seed, trial_index,
                           LinkStream::far);
  draw.g_relay = fading_gain(mean_channel_gain(geometry.d_relay, params), sigma, seed,
                             trial_index, LinkStream::relay);
  return draw;
}

}  // namespace noma
