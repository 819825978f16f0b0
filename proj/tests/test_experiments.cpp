// Copyright 2026 The varqte authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "varqte/experiments.hpp"

using namespace varqte;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("config parsing") {
  SUBCASE("defaults for every experiment") {
    for (const auto& name : experiment_names()) CHECK(default_config(name).experiment == name);
    CHECK_THROWS_AS(default_config("bogus"), ConfigError);
  }
  SUBCASE("overrides are applied") {
    const ExperimentConfig c = parse_config_text(
        R"({"model": {"n": 10, "lambda": 0.5}, "strategy": {"kind": "block", "sweeps": 3},
            "schedule": [[5, 0.2]], "seed": 7})",
        "evolve");
    CHECK(c.n == 10);
    CHECK(c.lambda == 0.5);
    CHECK(c.strategy == StrategyKind::block);
    CHECK(c.sweeps == 3);
    CHECK(c.schedule == std::vector<std::pair<int, double>>{{5, 0.2}});
    CHECK(c.seed == 7);
  }
  SUBCASE("unknown fields are named in the error") {
    try {
      parse_config_text(R"({"model": {"qubits": 8}})", "evolve");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "model.qubits");
    }
    try {
      parse_config_text(R"({"frobnicate": 1})", "evolve");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "frobnicate");
    }
  }
  SUBCASE("type and range violations are rejected") {
    CHECK_THROWS_AS(parse_config_text(R"({"model": {"n": "eight"}})", "evolve"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"model": {"n": 7}})", "evolve"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schedule": []})", "evolve"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schedule": [[5, -0.1]]})", "evolve"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"experiment": "fig1a"})", "fig1b"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("{ not json", "evolve"), ConfigError);
  }
}

TEST_CASE("determinism: identical config and seed give byte-identical CSV") {
  TempDir dir_a("varqte_det_a");
  TempDir dir_b("varqte_det_b");
  ExperimentConfig c = default_config("evolve");
  c.n = 4;
  c.schedule = {{3, 0.1}};
  c.seed = 5;
  c.strategy = StrategyKind::cone;
  c.out_dir = dir_a.path.string();
  run_experiment(c);
  c.out_dir = dir_b.path.string();
  run_experiment(c);
  CHECK(slurp(dir_a.path / "evolve.csv") == slurp(dir_b.path / "evolve.csv"));
  CHECK(!slurp(dir_a.path / "evolve.csv").empty());
}

TEST_CASE("resume continues with matching energies") {
  TempDir dir_full("varqte_resume_full");
  TempDir dir_part("varqte_resume_part");

  ExperimentConfig full = default_config("evolve");
  full.n = 4;
  full.schedule = {{6, 0.1}};
  full.seed = 9;
  full.out_dir = dir_full.path.string();
  run_experiment(full);
  const std::string full_csv = slurp(dir_full.path / "evolve.csv");

  ExperimentConfig part = full;
  part.out_dir = dir_part.path.string();
  part.schedule = {{4, 0.1}};
  part.checkpoint = (dir_part.path / "ckpt.txt").string();
  run_experiment(part);

  ExperimentConfig rest = full;
  rest.out_dir = dir_part.path.string();
  rest.checkpoint = part.checkpoint;
  rest.resume = true;
  run_experiment(rest);
  const std::string rest_csv = slurp(dir_part.path / "evolve.csv");

  // compare the final two steps of the full run against the resumed rows
  auto rows = [](const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
  };
  const auto full_rows = rows(full_csv);
  const auto rest_rows = rows(rest_csv);
  REQUIRE(full_rows.size() == 8);  // header + initial + 6 steps
  REQUIRE(rest_rows.size() == 3);  // header + steps 5 and 6
  auto energy_of = [](const std::string& line) {
    const auto pos = line.rfind(',');
    return std::stod(line.substr(pos + 1));
  };
  CHECK(std::abs(energy_of(rest_rows[1]) - energy_of(full_rows[6])) < 1e-10);
  CHECK(std::abs(energy_of(rest_rows[2]) - energy_of(full_rows[7])) < 1e-10);
}

TEST_CASE("run_experiment writes the sidecar with config digest") {
  TempDir dir("varqte_sidecar");
  ExperimentConfig c = default_config("tdvp_condition");
  c.n_samples = 5;
  c.out_dir = dir.path.string();
  const RunResult result = run_experiment(c);
  CHECK(result.status == 0);
  const std::string sidecar = slurp(dir.path / "tdvp_condition.json");
  CHECK(sidecar.find("config_digest") != std::string::npos);
  CHECK(sidecar.find("\"seed\"") != std::string::npos);
  CHECK(sidecar.find("summary") != std::string::npos);
}
