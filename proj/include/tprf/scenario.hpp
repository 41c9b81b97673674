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
#ifndef TPRF_SCENARIO_HPP
#define TPRF_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tprf/ladder.hpp"

namespace tprf {

enum class Task { Spectrum, G2, SweepOmega, SweepDelta, Validate };
enum class LineSelect { Full, TPRF, GE, EF };

struct FilterSpec {
  enum class Type { Boxcar, RaisedCosine, File };
  Type type = Type::Boxcar;
  double bandwidth_mhz = 12.0;
  std::string file;
};

/// Parsed run configuration. Frequencies in the JSON are ordinary
/// frequencies ("/2pi", MHz) so experimentally quoted numbers can be copied
/// verbatim; LadderParams here is already converted to angular units.
struct Scenario {
  LadderParams params;
  Task task = Task::Spectrum;
  LineSelect line = LineSelect::Full;
  double tau_max_over_gamma = 20.0;
  int n_tau = 4096;
  std::vector<double> sweep;  // omega sweeps: Omega/2pi MHz; delta: delta/Gamma
  std::optional<FilterSpec> filter;
  bool hann_window = false;
  std::string output_stem = "tprf_out";
  int jobs = 1;
};

struct ScenarioResult {
  std::vector<std::string> files;
  nlohmann::ordered_json summary;
};

// Throws ConfigError with a field path on schema violations. task_override,
// when nonempty, is the CLI subcommand and must not contradict the config.
Scenario parse_scenario(const nlohmann::json& config,
                        const std::string& task_override = "");

// Runs the scenario and writes <stem>.csv plus <stem>_summary.json.
// Identical inputs produce byte-identical outputs.
ScenarioResult run_scenario(const Scenario& s);

const char* task_name(Task t);

}  // namespace tprf

#endif  // TPRF_SCENARIO_HPP
