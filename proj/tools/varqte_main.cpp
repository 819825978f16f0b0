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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "varqte/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"varqte: hardware-efficient variational quantum time evolution experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::int64_t seed = -1;
  bool wall_clock = false;

  for (const std::string& name : varqte::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the '" + name + "' experiment");
    sub->add_option("--config", config_path, "JSON config file (defaults used when omitted)");
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--out", out_dir, "output directory (default: config, $VARQTE_OUT_DIR, ./out)");
    sub->add_flag("--wall-clock", wall_clock, "include the wall-clock column in the CSV");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string experiment = app.get_subcommands().front()->get_name();

  try {
    varqte::ExperimentConfig config;
    if (config_path.empty()) {
      config = varqte::default_config(experiment);
    } else {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "error: cannot open config file " << config_path << "\n";
        return 2;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      config = varqte::parse_config_text(buf.str(), experiment);
    }
    if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (wall_clock) config.include_wall_clock = true;

    const varqte::RunResult result = varqte::run_experiment(config);
    std::cout << experiment << ": " << result.summary << "\n";
    for (const auto& file : result.artifacts) std::cout << "  wrote " << file << "\n";
    return result.status;
  } catch (const varqte::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
