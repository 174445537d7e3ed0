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

#include "noma/config_file.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace noma {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view s) {
  s = trim(s);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view s) {
  s = trim(s);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

bool parse_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw std::invalid_argument("expected true or false, got '" + std::string(s) + "'");
}

std::vector<double> parse_list(std::string_view s) {
  s = trim(s);
  if (!s.empty() && (s.front() == '{' || s.front() == '[')) s.remove_prefix(1);
  if (!s.empty() && (s.back() == '}' || s.back() == ']')) s.remove_suffix(1);
  std::vector<double> out;
  while (!trim(s).empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_double(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void check(bool ok, const char* expected) {
  if (!ok) throw std::invalid_argument(std::string("expected ") + expected);
}

// Shortest representation that parses back to the same double.
std::string round_trip(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Parsed values before defaults that depend on other keys are resolved.
struct Draft {
  ScenarioConfig config;
  std::optional<double> d_near, d_far, d_relay;
  std::optional<double> bandwidth_hz, density_dbm_hz, noise_power_w;
  std::optional<double> target_rate;
};

using Setter = std::function<void(Draft&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"near_distance_m",
       [](Draft& d, std::string_view v) {
         d.d_near = parse_double(v);
         check(*d.d_near > 0.0, "a distance > 0 m");
       }},
      {"far_distance_m",
       [](Draft& d, std::string_view v) {
         d.d_far = parse_double(v);
         check(*d.d_far > 0.0, "a distance > 0 m");
       }},
      {"relay_distance_m",
       [](Draft& d, std::string_view v) {
         d.d_relay = parse_double(v);
         check(*d.d_relay > 0.0, "a distance > 0 m");
       }},
      {"path_loss_exponent",
       [](Draft& d, std::string_view v) {
         d.config.path_loss.exponent = parse_double(v);
         check(d.config.path_loss.exponent > 0.0, "an exponent > 0");
       }},
      {"reference_distance_m",
       [](Draft& d, std::string_view v) {
         d.config.path_loss.reference_distance = parse_double(v);
         check(d.config.path_loss.reference_distance > 0.0, "a distance > 0 m");
       }},
      {"shadowing_sigma_db",
       [](Draft& d, std::string_view v) {
         d.config.path_loss.shadowing_sigma_db = parse_double(v);
         check(d.config.path_loss.shadowing_sigma_db >= 0.0, "a standard deviation >= 0 dB");
       }},
      {"bandwidth_hz",
       [](Draft& d, std::string_view v) {
         d.bandwidth_hz = parse_double(v);
         check(*d.bandwidth_hz > 0.0, "a bandwidth > 0 Hz");
       }},
      {"noise_density_dbm_hz",
       [](Draft& d, std::string_view v) { d.density_dbm_hz = parse_double(v); }},
      {"noise_power_w",
       [](Draft& d, std::string_view v) {
         d.noise_power_w = parse_double(v);
         check(*d.noise_power_w > 0.0, "a noise power > 0 W");
       }},
      {"target_rate",
       [](Draft& d, std::string_view v) {
         d.target_rate = parse_double(v);
         check(*d.target_rate > 0.0, "a rate > 0 bps/Hz");
       }},
      {"fps_alpha_far",
       [](Draft& d, std::string_view v) {
         d.config.fps_alpha_far = parse_double(v);
         check(d.config.fps_alpha_far > 0.5 && d.config.fps_alpha_far <= 1.0,
               "a value in (0.5, 1]: the far coefficient must exceed the near coefficient "
               "1 - fps_alpha_far");
       }},
      {"harvest_fraction",
       [](Draft& d, std::string_view v) {
         d.config.swipt.harvest_fraction = parse_double(v);
         check(d.config.swipt.harvest_fraction >= 0.0 && d.config.swipt.harvest_fraction <= 1.0,
               "a fraction in [0, 1]");
       }},
      {"harvest_efficiency",
       [](Draft& d, std::string_view v) {
         d.config.swipt.harvest_efficiency = parse_double(v);
         check(d.config.swipt.harvest_efficiency > 0.0 &&
                   d.config.swipt.harvest_efficiency <= 1.0,
               "an efficiency in (0, 1]");
       }},
      {"relay_enabled",
       [](Draft& d, std::string_view v) { d.config.relay_enabled = parse_bool(v); }},
      {"half_rate_factor",
       [](Draft& d, std::string_view v) {
         d.config.half_rate_factor = parse_double(v);
         check(d.config.half_rate_factor == 1.0 || d.config.half_rate_factor == 0.5,
               "1 or 0.5");
       }},
      {"blocking_attenuation",
       [](Draft& d, std::string_view v) {
         d.config.blocking_attenuation = parse_double(v);
         check(d.config.blocking_attenuation > 0.0 && d.config.blocking_attenuation <= 1.0,
               "a power factor in (0, 1]");
       }},
      {"power_levels_dbm",
       [](Draft& d, std::string_view v) {
         d.config.power_levels_dbm = parse_list(v);
         const auto& p = d.config.power_levels_dbm;
         check(!p.empty(), "at least one power level");
         for (std::size_t i = 1; i < p.size(); ++i) {
           check(p[i] > p[i - 1], "strictly increasing power levels");
         }
       }},
      {"n_trials",
       [](Draft& d, std::string_view v) {
         d.config.n_trials = parse_u64(v);
         check(d.config.n_trials >= 1, "n_trials >= 1");
       }},
      {"seed", [](Draft& d, std::string_view v) { d.config.seed = parse_u64(v); }},
      {"trace_power_dbm",
       [](Draft& d, std::string_view v) { d.config.trace_power_dbm = parse_double(v); }},
      {"trace_realizations",
       [](Draft& d, std::string_view v) {
         d.config.trace_realizations = parse_u64(v);
         check(d.config.trace_realizations >= 1, "trace_realizations >= 1");
       }},
  };
  return table;
}

}  // namespace

ConfigError::ConfigError(std::string field, std::size_t line, const std::string& message)
    : std::runtime_error(message), field_(std::move(field)), line_(line) {}

ScenarioConfig parse_config(std::string_view text) {
  Draft draft;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", line_no,
                        "line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                            std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError(key, line_no,
                        "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(key, line_no,
                        "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    try {
      it->second(draft, value);
    } catch (const std::invalid_argument& e) {
      std::string detail = e.what();
      if (detail.find("got '") == std::string::npos) detail += ", got '" + std::string(value) + "'";
      throw ConfigError(key, line_no, "line " + std::to_string(line_no) + ": " + key + ": " + detail);
    }
  }

  ScenarioConfig& c = draft.config;
  const double d_near = draft.d_near.value_or(c.geometry.d_near);
  const double d_far = draft.d_far.value_or(c.geometry.d_far);
  c.geometry = Geometry{d_near, d_far, draft.d_relay.value_or(d_far - d_near)};
  if (!(c.geometry.d_relay > 0.0)) {
    throw ConfigError("relay_distance_m", 0,
                      "relay_distance_m: far_distance_m - near_distance_m must be > 0 unless "
                      "relay_distance_m is given");
  }

  const double bandwidth = draft.bandwidth_hz.value_or(c.noise.bandwidth_hz);
  if (draft.noise_power_w) {
    c.noise = NoiseModel{*draft.noise_power_w, bandwidth};
  } else {
    c.noise = NoiseModel::thermal(bandwidth, draft.density_dbm_hz.value_or(-174.0));
  }
  if (draft.target_rate) c.target = RateTarget::from_rate(*draft.target_rate);

  const std::pair<const char*, double> distances[] = {{"near_distance_m", c.geometry.d_near},
                                                      {"far_distance_m", c.geometry.d_far},
                                                      {"relay_distance_m", c.geometry.d_relay}};
  for (const auto& [key, d] : distances) {
    if (d < c.path_loss.reference_distance) {
      throw ConfigError(key, 0,
                        std::string(key) + ": expected a distance >= reference_distance_m (" +
                            round_trip(c.path_loss.reference_distance) + "), got " + round_trip(d));
    }
  }

  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("", 0, e.what());
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", 0, "cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const ScenarioConfig& c) {
  std::ostringstream out;
  auto kv = [&](const char* key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  kv("near_distance_m", round_trip(c.geometry.d_near));
  kv("far_distance_m", round_trip(c.geometry.d_far));
  kv("relay_distance_m", round_trip(c.geometry.d_relay));
  kv("path_loss_exponent", round_trip(c.path_loss.exponent));
  kv("reference_distance_m", round_trip(c.path_loss.reference_distance));
  kv("shadowing_sigma_db", round_trip(c.path_loss.shadowing_sigma_db));
  kv("bandwidth_hz", round_trip(c.noise.bandwidth_hz));
  kv("noise_power_w", round_trip(c.noise.noise_power_w));
  kv("target_rate", round_trip(c.target.target_rate));
  kv("fps_alpha_far", round_trip(c.fps_alpha_far));
  kv("harvest_fraction", round_trip(c.swipt.harvest_fraction));
  kv("harvest_efficiency", round_trip(c.swipt.harvest_efficiency));
  kv("relay_enabled", c.relay_enabled ? "true" : "false");
  kv("half_rate_factor", round_trip(c.half_rate_factor));
  kv("blocking_attenuation", round_trip(c.blocking_attenuation));
  std::string levels;
  for (std::size_t i = 0; i < c.power_levels_dbm.size(); ++i) {
    if (i) levels += ", ";
    levels += round_trip(c.power_levels_dbm[i]);
  }
  kv("power_levels_dbm", levels);
  kv("n_trials", std::to_string(c.n_trials));
  kv("seed", std::to_string(c.seed));
  kv("trace_power_dbm", round_trip(c.trace_power_dbm));
  kv("trace_realizations", std::to_string(c.trace_realizations));
  return out.str();
}

}  // namespace noma
