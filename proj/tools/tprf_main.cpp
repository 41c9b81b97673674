/* Copyright 2026 The tprf Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tprf/scenario.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitPhysicsError = 3;

int run(const std::string& subcommand, const std::string& config_path,
        const std::string& out_stem, int jobs) {
  nlohmann::json config;
  try {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config " << config_path << "\n";
      return kExitConfigError;
    }
    config = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  tprf::Scenario scenario;
  try {
    scenario = tprf::parse_scenario(config, subcommand);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  if (!out_stem.empty()) scenario.output_stem = out_stem;
  scenario.jobs = jobs;

  try {
    const auto result = tprf::run_scenario(scenario);
    for (const auto& f : result.files) std::cout << "wrote " << f << "\n";
  } catch (const tprf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error [" << tprf::task_name(scenario.task)
              << "]: " << e.what() << "\n";
    return kExitPhysicsError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tprf: emission spectra, dressed states, and filtered photon "
      "correlations of a driven ladder-type emitter"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_stem;
  int jobs = 1;

  for (const char* name : {"spectrum", "g2", "sweep", "validate"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON scenario configuration")
        ->required();
    sub->add_option("--out", out_stem, "output file stem");
    sub->add_option("--jobs", jobs, "parallel sweep workers")
        ->check(CLI::PositiveNumber);
  }

  CLI11_PARSE(app, argc, argv);
  return run(app.get_subcommands().front()->get_name(), config_path, out_stem,
             jobs);
}
