// Copyright 2026 The Holonomy Authors
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

// Experiment drivers behind the CLI: each run resolves one config into
// simulation calls and a self-documenting artifact directory holding
// config.echo, the experiment's CSV files and report.json. Outputs are a
// pure function of the config (wall time never enters an artifact), so
// reruns are byte-identical.

#pragma once

#include <map>
#include <string>

#include "exp/config.hpp"

namespace holo {

struct ExperimentReport {
  // Serialized report.json content.
  std::string json_text;
  // One line for the terminal: experiment plus its headline number.
  std::string summary;
  // Flat numeric values for threshold checks and the C API.
  std::map<std::string, double> scalars;
};

// Experiment names accepted by the `experiment` key.
extern const char* const kExperimentNames[6];

// Runs the configured experiment, writing all artifacts into out_dir
// (created when missing). jobs <= 0 picks the hardware default; the
// HOLONOMY_JOBS environment variable overrides either. When the [assert]
// section is enabled, threshold misses raise after the artifacts are
// written, so a failed run still leaves its evidence behind.
ExperimentReport run_experiment(const Config& cfg, const std::string& out_dir,
                                int jobs);

}  // namespace holo
