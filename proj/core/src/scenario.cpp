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

#include "noma/scenario.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "noma/config_file.hpp"

#ifndef NOMA_VERSION
#define NOMA_VERSION "0.0.0"
#endif

namespace noma {
namespace {

std::string trend(const std::vector<double>& values) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    up |= values[i] > values[i - 1];
    down |= values[i] < values[i - 1];
  }
  if (up && down) return "non-monotonic";
  if (up) return "increasing";
  if (down) return "decreasing";
  return "constant";
}

std::string power_key(double power_dbm) { return "@" + format_real(power_dbm) + "dBm"; }

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

struct Writer {
  std::filesystem::path dir;
  RunManifest& manifest;

  void emit(const std::string& file_name, const std::string& contents) {
    write_file(dir / file_name, contents);
    manifest.files.push_back({file_name, sha256_hex(contents), contents.size()});
  }

  void note(std::string key, std::string value) {
    manifest.observations.emplace_back(std::move(key), std::move(value));
  }
};

void observe_sweep(Writer& w, const SweepResult& sweep, const ScenarioConfig& config) {
  std::vector<double> fps_outage;
  std::vector<double> dps_outage;
  for (double p : config.power_levels_dbm) {
    const auto fps = sweep.find(p, Scheme::fps, User::near);
    const auto dps = sweep.find(p, Scheme::dps, User::near);
    fps_outage.push_back(fps->outage_probability);
    dps_outage.push_back(dps->outage_probability);
    const double ratio = fps->avg_spectral_efficiency > 0.0
                             ? dps->avg_spectral_efficiency / fps->avg_spectral_efficiency
                             : 0.0;
    w.note("near_se_ratio_dps_over_fps" + power_key(p), format_real(ratio));
  }
  w.note("fps_near_outage_trend", trend(fps_outage));
  w.note("dps_near_outage_trend", trend(dps_outage));
}

void observe_relay(Writer& w, const SweepResult& cmp, const ScenarioConfig& config) {
  for (Scheme scheme : {Scheme::fps, Scheme::dps}) {
    int strictly_lower = 0;
    for (double p : config.power_levels_dbm) {
      const auto on = cmp.find(p, scheme, User::far_relay);
      const auto off = cmp.find(p, scheme, User::far_no_relay);
      if (on->outage_probability < off->outage_probability) ++strictly_lower;
    }
    w.note(std::string("relay_lowers_far_outage_levels.") + std::string(to_string(scheme)),
           std::to_string(strictly_lower) + "/" + std::to_string(config.power_levels_dbm.size()));
  }
}

void observe_trace(Writer& w, const std::string& prefix, const TraceResult& trace, User user) {
  for (Scheme scheme : {Scheme::fps, Scheme::dps}) {
    std::uint64_t below = 0;
    double peak = 0.0;
    for (const TraceEntry& e : trace.entries) {
      if (e.scheme != scheme || e.user != user) continue;
      if (!meets_target(e.spectral_efficiency, trace.reference_rate)) ++below;
      peak = std::max(peak, e.spectral_efficiency);
    }
    const std::string s(to_string(scheme));
    w.note(prefix + ".below_reference." + s, std::to_string(below));
    w.note(prefix + ".peak_se." + s, format_real(peak));
  }
}

}  // namespace

ScenarioName parse_scenario_name(std::string_view name) {
  if (name == "fig2") return ScenarioName::fig2;
  if (name == "fig3") return ScenarioName::fig3;
  if (name == "fig4") return ScenarioName::fig4;
  if (name == "trace-near") return ScenarioName::trace_near;
  if (name == "trace-far") return ScenarioName::trace_far;
  if (name == "all") return ScenarioName::all;
  throw std::invalid_argument("unknown scenario '" + std::string(name) +
                              "' (expected fig2, fig3, fig4, trace-near, trace-far or all)");
}

std::string_view to_string(ScenarioName name) noexcept {
  switch (name) {
    case ScenarioName::fig2:
      return "fig2";
    case ScenarioName::fig3:
      return "fig3";
    case ScenarioName::fig4:
      return "fig4";
    case ScenarioName::trace_near:
      return "trace-near";
    case ScenarioName::trace_far:
      return "trace-far";
    case ScenarioName::all:
      return "all";
  }
  return "unknown";
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string format_sweep_csv(std::string_view scenario, const SweepResult& result) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  const std::string trailer = "," + std::to_string(result.n_trials) + "," +
                              std::to_string(result.seed) + "\n";
  for (const SweepEntry& e : result.entries) {
    out += scenario;
    out += ',' + format_real(e.power_dbm);
    out += ',';
    out += to_string(e.scheme);
    out += ',';
    out += to_string(e.user);
    out += ',' + format_real(e.avg_spectral_efficiency);
    out += ',' + format_real(e.outage_probability);
    out += ',' + format_real(e.dps_infeasible_fraction);
    out += trailer;
  }
  return out;
}

std::string format_trace_csv(std::string_view scenario, const TraceResult& result, User user) {
  std::string out(kTraceCsvHeader);
  out += '\n';
  const std::string reference = "," + format_real(result.reference_rate) + "\n";
  for (const TraceEntry& e : result.entries) {
    if (e.user != user) continue;
    out += scenario;
    out += ',' + std::to_string(e.realization);
    out += ',';
    out += to_string(e.scheme);
    out += ',';
    out += to_string(e.user);
    out += ',' + format_real(e.spectral_efficiency);
    out += reference;
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string_view tool_version() noexcept { return NOMA_VERSION; }

std::string format_manifest(const RunManifest& m) {
  std::ostringstream out;
  out << "tool = noma_sim\n";
  out << "tool_version = " << m.tool_version << '\n';
  out << "scenario = " << m.scenario << '\n';
  out << "seed = " << m.seed << '\n';
  out << "workers = " << m.workers << '\n';
  out << "duration_s = " << format_real(m.duration_s) << '\n';
  std::istringstream config(m.config_snapshot);
  for (std::string line; std::getline(config, line);) {
    if (!line.empty()) out << "config." << line << '\n';
  }
  for (const OutputFile& f : m.files) {
    out << "file." << f.name << ".sha256 = " << f.sha256 << '\n';
    out << "file." << f.name << ".bytes = " << f.bytes << '\n';
  }
  for (const auto& [key, value] : m.observations) out << "observed." << key << " = " << value << '\n';
  return out.str();
}

RunManifest run_scenario(ScenarioName name, const ScenarioConfig& config,
                         const std::filesystem::path& out_dir, ExecutionOptions options) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());

  RunManifest manifest;
  manifest.scenario = std::string(to_string(name));
  manifest.tool_version = std::string(tool_version());
  manifest.seed = config.seed;
  manifest.workers =
      options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  manifest.config_snapshot = format_config(config);
  Writer w{out_dir, manifest};

  const bool all = name == ScenarioName::all;
  if (all || name == ScenarioName::fig2) {
    const SweepResult cmp = run_relay_comparison(config, options);
    w.emit("fig2.csv", format_sweep_csv("fig2", cmp));
    observe_relay(w, cmp, config);
  }
  if (all || name == ScenarioName::fig3 || name == ScenarioName::fig4) {
    const SweepResult sweep = run_sweep(config, options);
    if (all || name == ScenarioName::fig3) w.emit("fig3.csv", format_sweep_csv("fig3", sweep));
    if (all || name == ScenarioName::fig4) w.emit("fig4.csv", format_sweep_csv("fig4", sweep));
    observe_sweep(w, sweep, config);
  }
  if (all || name == ScenarioName::trace_near || name == ScenarioName::trace_far) {
    const TraceResult trace = run_trace(config, config.trace_power_dbm, config.trace_realizations);
    w.note("trace_power_dbm", format_real(trace.power_dbm));
    if (all || name == ScenarioName::trace_near) {
      w.emit("trace_near.csv", format_trace_csv("trace-near", trace, User::near));
      observe_trace(w, "trace_near", trace, User::near);
    }
    if (all || name == ScenarioName::trace_far) {
      w.emit("trace_far.csv", format_trace_csv("trace-far", trace, User::far));
      observe_trace(w, "trace_far", trace, User::far);
    }
  }

  manifest.duration_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  write_file(out_dir / kManifestFileName, format_manifest(manifest));
  return manifest;
}

}  // namespace noma
