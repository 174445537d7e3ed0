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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "noma/config_file.hpp"
#include "noma/scenario.hpp"

namespace fs = std::filesystem;
using noma::ScenarioConfig;
using noma::ScenarioName;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("noma_scenario_test_" + name);
  fs::remove_all(dir);
  return dir;
}

ScenarioConfig quick() {
  ScenarioConfig c;
  c.n_trials = 2000;
  c.trace_realizations = 50;
  return c;
}

}  // namespace

TEST_CASE("scenario names") {
  for (auto name : {ScenarioName::fig2, ScenarioName::fig3, ScenarioName::fig4,
                    ScenarioName::trace_near, ScenarioName::trace_far, ScenarioName::all}) {
    CHECK(noma::parse_scenario_name(noma::to_string(name)) == name);
  }
  CHECK_THROWS_AS(noma::parse_scenario_name("fig7"), std::invalid_argument);
  CHECK_THROWS_AS(noma::parse_scenario_name("trace_near"), std::invalid_argument);
}

TEST_CASE("reals print with 9 significant digits") {
  CHECK(noma::format_real(1.0) == "1");
  CHECK(noma::format_real(0.1234567891234) == "0.123456789");
  CHECK(noma::format_real(6.0e-5) == "6e-05");
  CHECK(noma::format_real(-2.5) == "-2.5");
}

TEST_CASE("sha256 of known inputs") {
  CHECK(noma::sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(noma::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("fig3 at defaults has 28 self-describing rows") {
  const fs::path dir = scratch("fig3");
  const auto manifest = noma::run_scenario(ScenarioName::fig3, quick(), dir);
  REQUIRE(manifest.files.size() == 1);
  CHECK(manifest.files[0].name == "fig3.csv");

  const std::string csv = slurp(dir / "fig3.csv");
  CHECK(csv.back() == '\n');
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 29);
  CHECK(rows[0] == noma::kSweepCsvHeader);
  CHECK(rows[1].rfind("fig3,0,FPS,near,", 0) == 0);
  CHECK(rows[4].rfind("fig3,0,DPS,far,", 0) == 0);
  CHECK(rows[28].rfind("fig3,30,DPS,far,", 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::count(rows[i].begin(), rows[i].end(), ',') == 8);
    CHECK(rows[i].find(",2000,20240601") != std::string::npos);
  }
  CHECK(manifest.files[0].sha256 == noma::sha256_hex(csv));
  fs::remove_all(dir);
}

TEST_CASE("all writes five CSVs plus a manifest, reproducibly") {
  const fs::path a = scratch("all_a");
  const fs::path b = scratch("all_b");
  const auto ma = noma::run_scenario(ScenarioName::all, quick(), a, {1});
  const auto mb = noma::run_scenario(ScenarioName::all, quick(), b, {3});

  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(a)) names.push_back(entry.path().filename());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"fig2.csv", "fig3.csv", "fig4.csv", "manifest.txt",
                                          "trace_far.csv", "trace_near.csv"});

  REQUIRE(ma.files.size() == 5);
  REQUIRE(mb.files.size() == 5);
  for (std::size_t i = 0; i < ma.files.size(); ++i) {
    CHECK(ma.files[i].name == mb.files[i].name);
    CHECK(ma.files[i].sha256 == mb.files[i].sha256);
    CHECK(slurp(a / ma.files[i].name) == slurp(b / mb.files[i].name));
  }

  const auto trace = lines(slurp(a / "trace_near.csv"));
  REQUIRE(trace.size() == 101);
  CHECK(trace[0] == noma::kTraceCsvHeader);
  CHECK(trace[1].rfind("trace-near,0,FPS,near,", 0) == 0);
  CHECK(trace[1].substr(trace[1].size() - 2) == ",1");
  CHECK(lines(slurp(a / "fig2.csv"))[1].rfind("fig2,0,FPS,far_relay,", 0) == 0);

  const std::string manifest = slurp(a / "manifest.txt");
  CHECK(manifest.find("scenario = all\n") != std::string::npos);
  CHECK(manifest.find("seed = 20240601\n") != std::string::npos);
  CHECK(manifest.find("tool_version = ") != std::string::npos);
  CHECK(manifest.find("duration_s = ") != std::string::npos);
  CHECK(manifest.find("file.fig3.csv.sha256 = " + ma.files[1].sha256) != std::string::npos);
  CHECK(manifest.find("observed.near_se_ratio_dps_over_fps@0dBm = ") != std::string::npos);
  CHECK(manifest.find("observed.dps_near_outage_trend = ") != std::string::npos);

  // The config block of the manifest reloads to the same scenario.
  std::string config_block;
  for (const auto& line : lines(manifest)) {
    if (line.rfind("config.", 0) == 0) config_block += line.substr(7) + "\n";
  }
  CHECK(config_block == noma::format_config(quick()));
  CHECK(noma::format_config(noma::parse_config(config_block)) == config_block);

  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("different seeds change the outputs") {
  const fs::path a = scratch("seed_a");
  ScenarioConfig c = quick();
  const auto m1 = noma::run_scenario(ScenarioName::fig4, c, a);
  c.seed = 99;
  const auto m2 = noma::run_scenario(ScenarioName::fig4, c, a);
  CHECK(m1.files[0].sha256 != m2.files[0].sha256);
  fs::remove_all(a);
}

TEST_CASE("unwritable output directory is an I/O error") {
  const fs::path file = fs::temp_directory_path() / "noma_scenario_test_not_a_dir";
  std::ofstream(file) << "x";
  CHECK_THROWS_AS(noma::run_scenario(ScenarioName::fig3, quick(), file / "sub"),
                  std::runtime_error);
  fs::remove(file);
}
