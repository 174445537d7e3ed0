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

#include <cmath>
#include <cstdint>
#include <numbers>

namespace noma {

// Counter-based random numbers: every variate is a pure function of
// (seed, trial, stream, lane), so any trial can be regenerated in isolation
// and the order in which workers visit trials does not matter.
namespace rng {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream,
                                 std::uint32_t lane) noexcept {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ ((static_cast<std::uint64_t>(stream) << 32) | lane));
  return h;
}

/// Uniform in the open interval (0, 1) on a 2^-52 grid offset by half a step.
constexpr double open_uniform(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

inline double uniform(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream,
                      std::uint32_t lane) noexcept {
  return open_uniform(hash_key(seed, trial, stream, lane));
}

/// Unit-mean exponential by inversion.
inline double standard_exponential(std::uint64_t seed, std::uint64_t trial,
                                   std::uint32_t stream) noexcept {
  return -std::log(uniform(seed, trial, stream, 0));
}

/// Standard normal via Box-Muller on lanes 1 and 2.
inline double standard_normal(std::uint64_t seed, std::uint64_t trial,
                              std::uint32_t stream) noexcept {
  const double u1 = uniform(seed, trial, stream, 1);
  const double u2 = uniform(seed, trial, stream, 2);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rng
}  // namespace noma
