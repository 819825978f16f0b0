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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "varqte/evolution.hpp"

namespace varqte {

/// Configuration error carrying the offending field name.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Resolved run configuration. Defaults depend on the experiment; a JSON
/// config file overrides them field by field.
struct ExperimentConfig {
  std::string experiment = "evolve";

  // model
  int n = 8;
  double j = 1.0;
  double lambda = 0.2;
  Boundary boundary = Boundary::open;

  // ansatz
  int depth = 2;
  std::string init = "random";  // "random" | "identity"

  StrategyKind strategy = StrategyKind::cone;
  int sweeps = 1;
  TimeKind kind = TimeKind::real;
  TrotterOrder order = TrotterOrder::first;

  std::vector<std::pair<int, double>> schedule;  // (steps, tau) segments
  bool oracle = false;

  std::uint64_t seed = 1;
  std::string out_dir;  // resolved: --out > config > VARQTE_OUT_DIR > "out"
  bool include_wall_clock = false;

  // evolve checkpointing
  std::string checkpoint;
  bool resume = false;

  // trotter_error
  std::vector<double> taus;

  // cone_accuracy / ising_ground
  int n_seeds = 25;
  int max_sweeps = 8;
  std::vector<double> lambdas;
  int steps = 20;
  double tau = 0.1;

  // tdvp_condition / tdvp_noise
  int n_samples = 100;
  double cutoff = 1e-7;
  std::vector<double> m_values;
  int trials = 50;
};

const std::vector<std::string>& experiment_names();

ExperimentConfig default_config(const std::string& experiment);

/// Parse a JSON document over the defaults. Unknown or ill-typed fields
/// raise ConfigError naming the field.
ExperimentConfig parse_config_text(const std::string& json_text, const std::string& experiment);

struct RunResult {
  int status = 0;
  std::string summary;
  std::vector<std::string> artifacts;  // files written
};

/// Execute one experiment: writes the CSV and JSON sidecar into out_dir and
/// returns a one-line summary.
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace varqte
